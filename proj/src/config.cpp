#include "turncue/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "turncue/error.hpp"

namespace turncue {
namespace {

void require(bool ok, const char* field, const char* constraint) {
    if (!ok) throw ConfigError(field, constraint);
}

void require_gamma(double gamma, const char* field) {
    require(gamma > 0.0 && std::isfinite(gamma), field, "must satisfy \xCE\xB3 > 0");
}

}  // namespace

const char* to_string(Method method) noexcept {
    switch (method) {
        case Method::LightAudio: return "light-audio";
        case Method::Light: return "light";
        case Method::Sgd: return "sgd";
        case Method::TextIcon: return "text-icon";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
    for (Method m : kAllMethods) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

void GuidanceConfig::validate() const {
    env.validate("lights.env");
    require_gamma(env_gamma, "lights.env_gamma");
    require(env_fade > 0.0, "lights.env_fade", "must be > 0");

    point.warm.validate("lights.point_warm");
    point.cold.validate("lights.point_cold");
    require_gamma(point.gamma, "lights.point_gamma");
    require(point.azimuth > 0.0 && point.azimuth < 180.0, "lights.point_azimuth", "must lie in (0, 180)");
    require(point.radius > 0.0, "lights.point_radius", "must be > 0");

    spot.levels.validate("lights.spot");
    spot.geometry.validate("lights.spot_cone");
    require_gamma(spot.gamma, "lights.spot_gamma");
    require(viewport_half_angle > 0.0 && viewport_half_angle < 180.0, "lights.viewport_half_angle",
            "must lie in (0, 180)");

    require(duck.duration > 0.0, "audio.duck_duration", "must be > 0");
    require(duck.ducked_gain >= 0.0 && duck.ducked_gain < 1.0, "audio.duck_gain", "must lie in [0, 1)");
    require(chime.max_repeats >= 1, "audio.chime_max_repeats", "must be >= 1");
    require(chime.max_repeats == 1 || chime.repeat_interval > 0.0, "audio.chime_repeat_interval",
            "must be > 0 when chime_max_repeats > 1");
    require(chime.length > 0.0, "audio.chime_length", "must be > 0");
    require(subtlety_weight >= 0.0 && subtlety_weight <= 1.0, "audio.subtlety_weight", "must lie in [0, 1]");

    require(min_theta_span > 0.0, "session.min_theta_span", "must be > 0");
    require(theta_min >= 0.0 && theta_min + min_theta_span <= 180.0, "session.theta_min",
            "must satisfy 0 <= theta_min <= 180 - min_theta_span");
    require(ack_threshold > 0.0 && ack_threshold < 180.0, "session.ack_threshold", "must lie in (0, 180)");
    require(ack_dwell > 0.0, "session.ack_dwell", "must be > 0");
    require(miss_timeout > 0.0, "session.miss_timeout", "must be > 0");
}

DuckEnvelope GuidanceConfig::effective_duck() const noexcept {
    DuckEnvelope d = duck;
    d.ducked_gain = 1.0 - subtlety_weight * (1.0 - duck.ducked_gain);
    return d;
}

ChimePolicy GuidanceConfig::effective_chime() const noexcept {
    ChimePolicy c = chime;
    c.max_repeats = std::max(1, static_cast<int>(std::lround(chime.max_repeats * subtlety_weight)));
    return c;
}

}  // namespace turncue
