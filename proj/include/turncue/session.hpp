#pragma once

#include <optional>
#include <variant>

#include "turncue/audio.hpp"
#include "turncue/config.hpp"
#include "turncue/geometry.hpp"
#include "turncue/lights.hpp"

namespace turncue {

enum class SessionPhase { Idle, Signaled, Acknowledged, Missed };

const char* to_string(SessionPhase phase) noexcept;
std::optional<SessionPhase> parse_phase(std::string_view text) noexcept;

/// theta ranges captured when the signal arrives, one per cue channel.
struct ChannelRanges {
    AngularRange env;    // gaze at signal -> target
    AngularRange spot;   // gaze -> target
    AngularRange point;  // head -> target
    AngularRange sound;  // head -> target
};

namespace state {

struct Idle {};

struct Signaled {
    double signal_time = 0.0;
    Vec3 signal_gaze;
    ChannelRanges ranges;
    double dwell = 0.0;
    std::optional<double> alignment_start;
};

struct Acknowledged {
    double response_time = 0.0;
    double ack_time = 0.0;
};

struct Missed {
    double miss_time = 0.0;
};

}  // namespace state

using SessionState = std::variant<state::Idle, state::Signaled, state::Acknowledged, state::Missed>;

SessionPhase phase_of(const SessionState& s) noexcept;

/// Defined only once the signal has been acknowledged.
std::optional<double> response_time(const SessionState& s) noexcept;

struct CueFrame {
    double timestamp = 0.0;
    double env_intensity = 0.0;
    PointLightState point;
    SpotlightState spot;
    SoundSourceState sound;
    double duck_gain = 1.0;
    SessionPhase phase = SessionPhase::Idle;

    friend bool operator==(const CueFrame&, const CueFrame&) = default;
};

/// Guides the user toward one new speaker: Idle -> Signaled -> Acknowledged | Missed.
/// reset() returns to Idle. Not thread-safe; one session per user.
class GuidanceSession {
public:
    explicit GuidanceSession(GuidanceConfig config, Method method = Method::LightAudio);

    /// Throws ConcurrentSignalError while Signaled, SessionStateError after a
    /// terminal state that has not been reset.
    void begin_signal(const Pose& pose, const Vec3& target, Role role);

    /// Advances by one frame at pose.timestamp. Throws TraceOrderError when the
    /// timestamp goes backwards.
    CueFrame tick(const Pose& pose, const Vec3& target, double dt);

    void reset() noexcept;

    const SessionState& state() const noexcept { return state_; }
    SessionPhase phase() const noexcept { return phase_of(state_); }
    std::optional<double> response_time() const noexcept { return turncue::response_time(state_); }

    const GuidanceConfig& config() const noexcept { return config_; }
    Method method() const noexcept { return method_; }

    /// Whether the target was inside the viewport when the current signal arrived.
    bool target_in_view_at_signal() const noexcept { return in_view_at_signal_; }

private:
    CueFrame inactive_frame(const Pose& pose, const Vec3& target, double env) const;
    CueFrame signaled_frame(const state::Signaled& s, const Pose& pose, const Vec3& target) const;

    GuidanceConfig config_;
    Method method_;
    Channels channels_;
    SessionState state_;
    Role role_ = Role::Listener;
    ChimePlan chimes_;
    bool in_view_at_signal_ = false;
    double restore_from_ = 0.0;  // env intensity when the session ended
    std::optional<double> last_timestamp_;
};

}  // namespace turncue
