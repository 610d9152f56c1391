#include "turncue/session.hpp"

#include <algorithm>
#include <cmath>

#include "turncue/error.hpp"

namespace turncue {
namespace {

// Absorbs accumulated rounding when comparing summed frame times to thresholds.
constexpr double kTimeEpsilon = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

AngularRange capture_range(double theta_min, double deviation, double min_span) {
    return AngularRange(theta_min, std::min(180.0, std::max(deviation, theta_min + min_span)));
}

}  // namespace

const char* to_string(SessionPhase phase) noexcept {
    switch (phase) {
        case SessionPhase::Idle: return "idle";
        case SessionPhase::Signaled: return "signaled";
        case SessionPhase::Acknowledged: return "acknowledged";
        case SessionPhase::Missed: return "missed";
    }
    return "?";
}

std::optional<SessionPhase> parse_phase(std::string_view text) noexcept {
    for (auto p : {SessionPhase::Idle, SessionPhase::Signaled, SessionPhase::Acknowledged, SessionPhase::Missed}) {
        if (text == to_string(p)) return p;
    }
    return std::nullopt;
}

SessionPhase phase_of(const SessionState& s) noexcept {
    return std::visit(overloaded{
                          [](const state::Idle&) { return SessionPhase::Idle; },
                          [](const state::Signaled&) { return SessionPhase::Signaled; },
                          [](const state::Acknowledged&) { return SessionPhase::Acknowledged; },
                          [](const state::Missed&) { return SessionPhase::Missed; },
                      },
                      s);
}

std::optional<double> response_time(const SessionState& s) noexcept {
    if (const auto* ack = std::get_if<state::Acknowledged>(&s)) return ack->response_time;
    return std::nullopt;
}

GuidanceSession::GuidanceSession(GuidanceConfig config, Method method)
    : config_(std::move(config)), method_(method), channels_(channels_for(method)) {
    config_.validate();
    restore_from_ = config_.env.l_max;
}

void GuidanceSession::begin_signal(const Pose& pose, const Vec3& target, Role role) {
    switch (phase()) {
        case SessionPhase::Idle: break;
        case SessionPhase::Signaled:
            throw ConcurrentSignalError("a signal is already being guided; multi-speaker queuing is unsupported");
        default:
            throw SessionStateError("session must be reset before a new signal");
    }
    const Vec3 signal_gaze = pose.gaze_forward;
    const double gaze_dev = deviation_to_target(pose, target, DeviationReference::GazeToTarget, signal_gaze);
    const double head_dev = deviation_to_target(pose, target, DeviationReference::HeadToTarget, signal_gaze);
    const double lo = config_.theta_min;
    const double span = config_.min_theta_span;

    state::Signaled s{
        pose.timestamp,
        signal_gaze,
        ChannelRanges{capture_range(lo, gaze_dev, span), capture_range(lo, gaze_dev, span),
                      capture_range(lo, head_dev, span), capture_range(lo, head_dev, span)},
        0.0,
        std::nullopt,
    };
    role_ = role;
    in_view_at_signal_ = in_viewport(pose, target, config_.viewport_half_angle);
    chimes_ = chime_schedule(pose.timestamp, config_.effective_chime(), config_.effective_duck());
    state_ = std::move(s);
}

void GuidanceSession::reset() noexcept {
    state_ = state::Idle{};
    chimes_ = {};
    in_view_at_signal_ = false;
    restore_from_ = config_.env.l_max;
}

CueFrame GuidanceSession::inactive_frame(const Pose& pose, const Vec3& target, double env) const {
    CueFrame f;
    f.timestamp = pose.timestamp;
    f.env_intensity = env;
    f.point.position = pose.position;
    f.point.color = config_.point.cold;
    f.spot.aim = target;
    f.sound.position = target;
    f.phase = phase();
    return f;
}

CueFrame GuidanceSession::signaled_frame(const state::Signaled& s, const Pose& pose, const Vec3& target) const {
    const double now = pose.timestamp;
    CueFrame f = inactive_frame(pose, target, config_.env.l_max);
    if (channels_.lights) {
        const double env_theta = deviation_to_target(pose, target, DeviationReference::GazeAtSignal, s.signal_gaze);
        f.env_intensity = env_light_with_fade(now - s.signal_time, env_theta, config_.env.l_max, s.ranges.env,
                                              config_.env, config_.env_gamma, config_.env_fade);
        f.point = point_light_state(pose, target, s.ranges.point, config_.point, config_.viewport_half_angle);
        f.spot = spotlight_state(pose, target, s.ranges.spot, config_.spot, config_.viewport_half_angle);
    }
    if (channels_.audio) {
        const double head_theta = deviation_to_target(pose, target, DeviationReference::HeadToTarget, s.signal_gaze);
        f.sound.active = true;
        f.sound.position = sound_source_position(pose.position, target, head_theta, s.ranges.sound,
                                                 config_.sound_easing);
        f.sound.chime_active = chime_playing(now, chimes_.chimes, config_.chime.length);
        f.duck_gain = duck_gain(now, chimes_.duck, role_);
    }
    return f;
}

CueFrame GuidanceSession::tick(const Pose& pose, const Vec3& target, double dt) {
    if (!(dt > 0.0)) throw TraceOrderError("tick dt must be > 0");
    if (last_timestamp_ && pose.timestamp < *last_timestamp_) {
        throw TraceOrderError("pose timestamp went backwards");
    }
    last_timestamp_ = pose.timestamp;
    const double now = pose.timestamp;

    if (auto* s = std::get_if<state::Signaled>(&state_)) {
        const double gaze_dev = deviation_to_target(pose, target, DeviationReference::GazeToTarget, s->signal_gaze);
        if (gaze_dev <= config_.ack_threshold) {
            if (s->alignment_start) {
                s->dwell = std::min(s->dwell + dt, config_.ack_dwell);
            } else {
                s->alignment_start = now;
                s->dwell = 0.0;
            }
        } else {
            s->alignment_start.reset();
            s->dwell = 0.0;
        }

        CueFrame frame = signaled_frame(*s, pose, target);
        const bool acknowledged = s->alignment_start && s->dwell + kTimeEpsilon >= config_.ack_dwell;
        const bool missed = now - s->signal_time + kTimeEpsilon >= config_.miss_timeout;
        if (!acknowledged && !missed) {
            return frame;
        }
        restore_from_ = frame.env_intensity;
        if (acknowledged) {
            state_ = state::Acknowledged{*s->alignment_start - s->signal_time, now};
        } else {
            state_ = state::Missed{now};
        }
        return inactive_frame(pose, target, restore_from_);
    }

    double env = config_.env.l_max;
    double ended_at = now;
    if (const auto* a = std::get_if<state::Acknowledged>(&state_)) ended_at = a->ack_time;
    if (const auto* m = std::get_if<state::Missed>(&state_)) ended_at = m->miss_time;
    if (phase() != SessionPhase::Idle) {
        const double blend = std::min((now - ended_at) / config_.env_fade, 1.0);
        env = std::lerp(restore_from_, config_.env.l_max, blend);
    }
    return inactive_frame(pose, target, env);
}

}  // namespace turncue
