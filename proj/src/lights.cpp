#include "turncue/lights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "turncue/error.hpp"

namespace turncue {
namespace {

std::string key(std::string_view field, const char* leaf) {
    std::string k(field);
    if (!k.empty()) k += '.';
    return k + leaf;
}

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void LightLevels::validate(std::string_view field) const {
    if (!(l_min >= 0.0)) throw ConfigError(key(field, "l_min"), "must satisfy l_min >= 0");
    if (!(l_max > l_min)) throw ConfigError(key(field, "l_max"), "must satisfy l_max > l_min");
}

void ColorRGB::validate(std::string_view field) const {
    if (!in_unit_interval(r) || !in_unit_interval(g) || !in_unit_interval(b)) {
        throw ConfigError(std::string(field), "each color channel must lie in [0, 1]");
    }
}

void SpotlightGeometry::validate(std::string_view field) const {
    if (!(a_min > 0.0)) throw ConfigError(key(field, "a_min"), "must satisfy a_min > 0");
    if (!(a_max > a_min)) throw ConfigError(key(field, "a_max"), "must satisfy a_max > a_min");
    if (!(a_max <= 180.0)) throw ConfigError(key(field, "a_max"), "must satisfy a_max <= 180");
}

double env_light_intensity(double theta, const AngularRange& range, const LightLevels& levels, double gamma) {
    levels.validate("env");
    return std::lerp(levels.l_min, levels.l_max, normalized_progress(theta, range, gamma));
}

double env_light_with_fade(double t_since_signal, double theta, double original, const AngularRange& range,
                           const LightLevels& levels, double gamma, double fade_duration) {
    if (!(fade_duration > 0.0)) throw ConfigError("env_fade", "must satisfy fade_duration > 0");
    if (!(t_since_signal >= 0.0)) throw ConfigError("t_since_signal", "must be >= 0");
    const double target = env_light_intensity(theta, range, levels, gamma);
    const double blend = std::min(t_since_signal / fade_duration, 1.0);
    return std::lerp(original, target, blend);
}

ColorRGB point_light_color(double theta, const AngularRange& range, const ColorRGB& warm, const ColorRGB& cold,
                           double gamma) {
    const double p = normalized_progress(theta, range, gamma);
    auto channel = [p](double c, double w) { return std::clamp(std::lerp(c, w, p), 0.0, 1.0); };
    return {channel(cold.r, warm.r), channel(cold.g, warm.g), channel(cold.b, warm.b)};
}

PointLightState point_light_state(const Pose& pose, const Vec3& target, const AngularRange& range,
                                  const PointLightParams& params, double viewport_half_angle) {
    PointLightState state;
    state.side = lateral_side(pose, target);
    state.position = pose.position;
    state.color = params.cold;
    if (in_viewport(pose, target, viewport_half_angle)) {
        return state;
    }
    const double theta = deviation_to_target(pose, target, DeviationReference::HeadToTarget, pose.gaze_forward);
    Vec3 flat{pose.head_forward.x, 0.0, pose.head_forward.z};
    // Looking straight up or down: fall back to world forward.
    flat = length(flat) < 1e-9 ? Vec3{0.0, 0.0, 1.0} : normalized(flat);
    const double azimuth = state.side == Side::Right ? params.azimuth : -params.azimuth;
    state.active = true;
    state.position = pose.position + yaw(flat, azimuth) * params.radius;
    state.color = point_light_color(theta, range, params.warm, params.cold, params.gamma);
    return state;
}

SpotlightState spotlight_state(const Pose& pose, const Vec3& target, const AngularRange& range,
                               const SpotlightParams& params, double viewport_half_angle) {
    params.levels.validate("spot");
    params.geometry.validate("spot");
    SpotlightState state;
    state.aim = target;
    const double theta = deviation_to_target(pose, target, DeviationReference::GazeToTarget, pose.gaze_forward);
    const double p = normalized_progress(theta, range, params.gamma);
    state.intensity = std::lerp(params.levels.l_min, params.levels.l_max, p);
    state.cone_angle = std::lerp(params.geometry.a_min, params.geometry.a_max, p);
    state.active = in_viewport(pose, target, viewport_half_angle) &&
                   !(params.deactivate_at_min && theta <= range.theta_min());
    return state;
}

}  // namespace turncue
