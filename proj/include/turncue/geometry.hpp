#pragma once

#include <cmath>

namespace turncue {

// World frame: +y is up, the horizontal plane is x/z, and with a forward
// direction of +z the user's right-hand side is +x.

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3& operator+=(const Vec3& o) noexcept { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Vec3& operator-=(const Vec3& o) noexcept { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Vec3& operator*=(double s) noexcept { x *= s; y *= s; z *= s; return *this; }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
    friend constexpr Vec3 operator*(Vec3 a, double s) noexcept { return a *= s; }
    friend constexpr Vec3 operator*(double s, Vec3 a) noexcept { return a *= s; }
    friend constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) noexcept { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double length(const Vec3& v) noexcept { return std::sqrt(dot(v, v)); }

/// Throws DegenerateGeometryError for a zero-length vector.
Vec3 normalized(const Vec3& v);

inline constexpr Vec3 kWorldUp{0.0, 1.0, 0.0};
inline constexpr double kUnitTolerance = 1e-6;

bool is_unit(const Vec3& v) noexcept;

struct Pose {
    Vec3 position;
    Vec3 head_forward{0.0, 0.0, 1.0};
    Vec3 gaze_forward{0.0, 0.0, 1.0};
    double timestamp = 0.0;

    friend bool operator==(const Pose&, const Pose&) = default;
};

/// Angular band [theta_min, theta_max] in degrees bounding cue modulation.
class AngularRange {
public:
    /// Throws ConfigError unless 0 <= theta_min < theta_max <= 180.
    AngularRange(double theta_min, double theta_max);

    double theta_min() const noexcept { return min_; }
    double theta_max() const noexcept { return max_; }
    double span() const noexcept { return max_ - min_; }

    friend bool operator==(const AngularRange&, const AngularRange&) = default;

private:
    double min_;
    double max_;
};

enum class DeviationReference {
    GazeAtSignal,  // current gaze vs. gaze captured when the signal arrived
    HeadToTarget,
    GazeToTarget,
};

enum class Side { Left, Right };

const char* to_string(Side side) noexcept;

/// Unsigned angle in degrees, [0, 180]. Both inputs must be unit-length.
double angular_deviation(const Vec3& a, const Vec3& b);

double deviation_to_target(const Pose& pose, const Vec3& target, DeviationReference ref,
                           const Vec3& signal_gaze);

/// Inclusive at the boundary.
bool in_viewport(const Pose& pose, const Vec3& target, double half_angle);

/// Side of head_forward (projected to the horizontal plane) the target lies on.
/// Targets straight ahead or straight behind resolve to Right.
Side lateral_side(const Pose& pose, const Vec3& target);

/// ((clamp(theta) - theta_min) / (theta_max - theta_min))^gamma, in [0, 1].
double normalized_progress(double theta, const AngularRange& range, double gamma);

/// Rotates `from` toward `to` by at most `max_step` degrees along the great circle.
/// Antiparallel inputs turn about the world up axis.
Vec3 rotate_towards(const Vec3& from, const Vec3& to, double max_step);

/// Rotates `v` about the world up axis by `degrees`; positive turns toward +x from +z.
Vec3 yaw(const Vec3& v, double degrees);

}  // namespace turncue
