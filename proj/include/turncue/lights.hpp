#pragma once

#include <string_view>

#include "turncue/geometry.hpp"

namespace turncue {

struct LightLevels {
    double l_min = 0.5;
    double l_max = 1.1;

    /// 0 <= l_min < l_max; `field` prefixes the error message.
    void validate(std::string_view field) const;
    friend bool operator==(const LightLevels&, const LightLevels&) = default;
};

struct ColorRGB {
    double r = 1.0;
    double g = 1.0;
    double b = 1.0;

    void validate(std::string_view field) const;
    friend bool operator==(const ColorRGB&, const ColorRGB&) = default;
};

/// Spotlight cone angle limits in degrees.
struct SpotlightGeometry {
    double a_min = 30.0;
    double a_max = 60.0;

    void validate(std::string_view field) const;
    friend bool operator==(const SpotlightGeometry&, const SpotlightGeometry&) = default;
};

struct PointLightParams {
    ColorRGB warm{1.0, 0.902, 0.259};
    ColorRGB cold{1.0, 1.0, 1.0};
    double gamma = 1.0;
    double azimuth = 75.0;  // degrees off head_forward, horizontal
    double radius = 0.5;    // meters from head position
};

struct SpotlightParams {
    LightLevels levels{0.8, 1.5};
    SpotlightGeometry geometry{30.0, 60.0};
    double gamma = 1.0;
    bool deactivate_at_min = true;
};

struct PointLightState {
    bool active = false;
    Side side = Side::Right;
    Vec3 position;
    ColorRGB color;

    friend bool operator==(const PointLightState&, const PointLightState&) = default;
};

struct SpotlightState {
    bool active = false;
    double intensity = 0.0;
    double cone_angle = 0.0;  // degrees
    Vec3 aim;

    friend bool operator==(const SpotlightState&, const SpotlightState&) = default;
};

double env_light_intensity(double theta, const AngularRange& range, const LightLevels& levels, double gamma);

/// Linear blend from `original` toward env_light_intensity over `fade_duration` seconds.
double env_light_with_fade(double t_since_signal, double theta, double original, const AngularRange& range,
                           const LightLevels& levels, double gamma, double fade_duration = 2.0);

/// theta_max yields `warm`, theta_min yields `cold`.
ColorRGB point_light_color(double theta, const AngularRange& range, const ColorRGB& warm, const ColorRGB& cold,
                           double gamma);

/// Active only while the target is outside the viewport. Color follows the
/// head-to-target deviation.
PointLightState point_light_state(const Pose& pose, const Vec3& target, const AngularRange& range,
                                  const PointLightParams& params, double viewport_half_angle);

/// Active only while the target is inside the viewport. Intensity and cone
/// follow the gaze-to-target deviation.
SpotlightState spotlight_state(const Pose& pose, const Vec3& target, const AngularRange& range,
                               const SpotlightParams& params, double viewport_half_angle);

}  // namespace turncue
