#include "turncue/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "turncue/error.hpp"

namespace turncue {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kDegToRad = std::numbers::pi / 180.0;

void require_unit(const Vec3& v, const char* name) {
    if (!is_unit(v)) {
        throw InvalidDirectionError(std::string(name) + " is not unit length (|v| = " +
                                    std::to_string(length(v)) + ")");
    }
}

Vec3 direction_to(const Pose& pose, const Vec3& target) {
    const Vec3 d = target - pose.position;
    if (length(d) == 0.0) {
        throw DegenerateGeometryError("target coincides with user position");
    }
    return normalized(d);
}

}  // namespace

Vec3 normalized(const Vec3& v) {
    const double n = length(v);
    if (n == 0.0 || !std::isfinite(n)) {
        throw DegenerateGeometryError("cannot normalize a zero-length vector");
    }
    return v * (1.0 / n);
}

bool is_unit(const Vec3& v) noexcept { return std::abs(length(v) - 1.0) <= kUnitTolerance; }

AngularRange::AngularRange(double theta_min, double theta_max) : min_(theta_min), max_(theta_max) {
    if (!(theta_min >= 0.0 && theta_min <= 180.0)) {
        throw ConfigError("theta_min", "must lie in [0, 180] (got " + std::to_string(theta_min) + ")");
    }
    if (!(theta_max >= 0.0 && theta_max <= 180.0)) {
        throw ConfigError("theta_max", "must lie in [0, 180] (got " + std::to_string(theta_max) + ")");
    }
    if (!(theta_max > theta_min)) {
        throw ConfigError("theta_max", "must satisfy theta_max > theta_min");
    }
}

const char* to_string(Side side) noexcept { return side == Side::Left ? "left" : "right"; }

double angular_deviation(const Vec3& a, const Vec3& b) {
    require_unit(a, "first direction");
    require_unit(b, "second direction");
    // atan2 keeps precision near 0 and 180 where acos does not.
    const double deg = std::atan2(length(cross(a, b)), dot(a, b)) * kRadToDeg;
    return std::clamp(deg, 0.0, 180.0);
}

double deviation_to_target(const Pose& pose, const Vec3& target, DeviationReference ref,
                           const Vec3& signal_gaze) {
    switch (ref) {
        case DeviationReference::GazeAtSignal:
            return angular_deviation(pose.gaze_forward, signal_gaze);
        case DeviationReference::HeadToTarget:
            return angular_deviation(pose.head_forward, direction_to(pose, target));
        case DeviationReference::GazeToTarget:
            return angular_deviation(pose.gaze_forward, direction_to(pose, target));
    }
    return 0.0;
}

bool in_viewport(const Pose& pose, const Vec3& target, double half_angle) {
    if (!(half_angle > 0.0 && half_angle < 180.0)) {
        throw ConfigError("viewport_half_angle", "must lie in (0, 180)");
    }
    return angular_deviation(pose.head_forward, direction_to(pose, target)) <= half_angle;
}

Side lateral_side(const Pose& pose, const Vec3& target) {
    const Vec3 right = cross(kWorldUp, pose.head_forward);
    const Vec3 to_target = target - pose.position;
    return dot(right, to_target) < 0.0 ? Side::Left : Side::Right;
}

double normalized_progress(double theta, const AngularRange& range, double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw ConfigError("gamma", "must satisfy \xCE\xB3 > 0 (got " + std::to_string(gamma) + ")");
    }
    const double clamped = std::min(range.theta_max(), std::max(theta, range.theta_min()));
    const double linear = (clamped - range.theta_min()) / range.span();
    return std::pow(linear, gamma);
}

Vec3 rotate_towards(const Vec3& from, const Vec3& to, double max_step) {
    const Vec3 a = normalized(from);
    const Vec3 b = normalized(to);
    const double angle = std::atan2(length(cross(a, b)), dot(a, b)) * kRadToDeg;
    if (angle <= max_step) {
        return b;
    }
    Vec3 axis = cross(a, b);
    if (length(axis) < 1e-12) {
        axis = kWorldUp;
        if (length(cross(axis, a)) < 1e-12) {
            axis = {1.0, 0.0, 0.0};
        }
    }
    axis = normalized(axis);
    // Rodrigues rotation of `a` about `axis`.
    const double r = max_step * kDegToRad;
    const Vec3 rotated = a * std::cos(r) + cross(axis, a) * std::sin(r) + axis * (dot(axis, a) * (1.0 - std::cos(r)));
    return normalized(rotated);
}

Vec3 yaw(const Vec3& v, double degrees) {
    const double r = degrees * kDegToRad;
    const double c = std::cos(r);
    const double s = std::sin(r);
    return {v.x * c + v.z * s, v.y, -v.x * s + v.z * c};
}

}  // namespace turncue
