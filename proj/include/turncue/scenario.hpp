#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "turncue/config.hpp"
#include "turncue/geometry.hpp"
#include "turncue/metrics.hpp"
#include "turncue/trace.hpp"

namespace turncue {

inline constexpr int kUserId = 0;
inline constexpr double kDefaultDt = 1.0 / 72.0;

struct Turn {
    int speaker = 0;          // 0 is the user, 1..agent_count are agents
    double duration = 20.0;   // seconds, used when the turn is not claimed by a signal
    bool signaled = false;    // this turn was claimed by a signal sent during the previous turn
};

/// Declarative turn-taking schedule for one trial.
///
/// Participant `id` sits at seats[(user_seat + id) % seats.size()], so agent
/// placement relative to the user does not depend on which seat the user takes.
struct ScenarioScript {
    std::vector<Vec3> seats;
    int user_seat = 0;
    Role role = Role::Listener;
    Method method = Method::LightAudio;
    std::vector<Turn> turns;
    double signal_offset = 5.0;
    int topic = 0;
    Vec3 desk_anchor;
    std::vector<std::string> agent_names;  // index 0 is agent 1
    std::vector<int> agent_skins;
    int in_view_agent = 0;
    int out_of_view_agent = 0;

    int agent_count() const noexcept { return static_cast<int>(seats.size()) - 1; }
    Vec3 position_of(int id) const;
    Vec3 table_center() const;
    std::string name_of(int id) const;

    /// Throws ValidationError.
    void validate() const;
};

inline constexpr int kAgentCount = 5;

/// Six seats on a 1.2 m round table at head height.
std::vector<Vec3> default_seats();

/// Two-signal scenarios (one out-of-view, one in-view new speaker); the user
/// speaks or listens when the signals arrive depending on `role`.
ScenarioScript default_script(Role role, Method method = Method::LightAudio, int user_seat = 0);

/// Panel position on the desk in front of the user: 0.45 m toward the table
/// center, 0.35 m below head height.
Vec3 default_desk_anchor(const ScenarioScript& script);

/// Synthetic stand-in for the participant: after a perception latency it turns
/// its head toward the new speaker at a fixed angular speed, the gaze following
/// the head with a fixed lead. Otherwise it fixates whoever holds the turn.
struct GazeAgentModel {
    struct Latency {
        double mean = 0.6;
        double jitter = 0.15;  // half-width of a uniform spread, clamped at 0
    };

    std::array<std::array<Latency, 2>, 4> latency{};  // [method][in_view]
    double head_speed = 120.0;  // deg/s
    double gaze_speed = 300.0;  // deg/s
    double gaze_lead = 0.0;     // degrees the gaze runs ahead of the head

    Latency& latency_for(Method method, bool in_view) noexcept;
    const Latency& latency_for(Method method, bool in_view) const noexcept;

    /// Throws ConfigError.
    void validate() const;
};

struct ScenarioResult {
    Trace trace;
    std::vector<SessionOutcome> outcomes;  // live, in session order
};

/// Fixed-step replay of one script. Throws ValidationError before simulating
/// anything if the script, agent, config or dt is invalid.
ScenarioResult run_scenario(const ScenarioScript& script, const GazeAgentModel& agent, const GuidanceConfig& config,
                            double dt, std::uint64_t seed);

}  // namespace turncue
