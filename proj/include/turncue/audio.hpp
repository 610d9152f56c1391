#pragma once

#include <vector>

#include "turncue/geometry.hpp"

namespace turncue {

enum class Role { Speaker, Listener };

const char* to_string(Role role) noexcept;

/// How the chime source travels from the user's head (theta_max) to the
/// target (theta_min). Linear is the default; Cosine eases out of the head.
enum class SoundEasing { Linear, Cosine };

struct SoundSourceState {
    bool active = false;
    Vec3 position;
    bool chime_active = false;

    friend bool operator==(const SoundSourceState&, const SoundSourceState&) = default;
};

struct DuckEnvelope {
    double start_time = 0.0;
    double duration = 2.0;
    double ducked_gain = 0.5;

    friend bool operator==(const DuckEnvelope&, const DuckEnvelope&) = default;
};

struct ChimePolicy {
    double repeat_interval = 0.0;  // seconds between plays; ignored when max_repeats == 1
    int max_repeats = 1;           // total number of plays
    double length = 2.0;           // seconds a single play is audible
};

struct ChimePlan {
    std::vector<double> chimes;  // play start times
    DuckEnvelope duck;
};

/// Fraction of the way from u to t for a given deviation: 0 at theta >= theta_max,
/// 1 at theta <= theta_min.
double sound_path_fraction(double theta, const AngularRange& range, SoundEasing easing = SoundEasing::Linear);

/// Throws DegenerateGeometryError when u == t.
Vec3 sound_source_position(const Vec3& user, const Vec3& target, double theta, const AngularRange& range,
                           SoundEasing easing = SoundEasing::Linear);

/// Step envelope. Speakers are never attenuated.
double duck_gain(double now, const DuckEnvelope& envelope, Role role);

/// Chimes start at `signal_time` and repeat per `policy`; the duck window
/// opens with the first chime.
ChimePlan chime_schedule(double signal_time, const ChimePolicy& policy, const DuckEnvelope& duck_template);

/// True while any chime in `chimes` is within its audible window.
bool chime_playing(double now, const std::vector<double>& chimes, double length) noexcept;

}  // namespace turncue
