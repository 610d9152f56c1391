#include "turncue/audio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "turncue/error.hpp"

namespace turncue {

const char* to_string(Role role) noexcept { return role == Role::Speaker ? "speaker" : "listener"; }

double sound_path_fraction(double theta, const AngularRange& range, SoundEasing easing) {
    if (theta >= range.theta_max()) return 0.0;
    if (theta <= range.theta_min()) return 1.0;
    const double s = (range.theta_max() - theta) / range.span();
    if (easing == SoundEasing::Cosine) {
        return 1.0 - std::cos(s * std::numbers::pi / 2.0);
    }
    return s;
}

Vec3 sound_source_position(const Vec3& user, const Vec3& target, double theta, const AngularRange& range,
                           SoundEasing easing) {
    const Vec3 path = target - user;
    if (length(path) == 0.0) {
        throw DegenerateGeometryError("sound path has zero length (user == target)");
    }
    const double s = sound_path_fraction(theta, range, easing);
    if (s == 0.0) return user;
    if (s == 1.0) return target;
    return user + path * s;
}

double duck_gain(double now, const DuckEnvelope& envelope, Role role) {
    if (role == Role::Speaker) return 1.0;
    const bool inside = now >= envelope.start_time && now < envelope.start_time + envelope.duration;
    return inside ? envelope.ducked_gain : 1.0;
}

ChimePlan chime_schedule(double signal_time, const ChimePolicy& policy, const DuckEnvelope& duck_template) {
    if (!(signal_time >= 0.0)) throw ConfigError("signal_time", "must be >= 0");
    if (policy.max_repeats < 1) throw ConfigError("audio.chime_max_repeats", "must be >= 1");
    if (policy.max_repeats > 1 && !(policy.repeat_interval > 0.0)) {
        throw ConfigError("audio.chime_repeat_interval", "must be > 0 when chime_max_repeats > 1");
    }
    ChimePlan plan;
    plan.chimes.reserve(static_cast<std::size_t>(policy.max_repeats));
    for (int i = 0; i < policy.max_repeats; ++i) {
        plan.chimes.push_back(signal_time + policy.repeat_interval * i);
    }
    plan.duck = duck_template;
    plan.duck.start_time = signal_time;
    return plan;
}

bool chime_playing(double now, const std::vector<double>& chimes, double length) noexcept {
    return std::any_of(chimes.begin(), chimes.end(),
                       [&](double start) { return now >= start && now < start + length; });
}

}  // namespace turncue
