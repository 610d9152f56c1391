#include "turncue/scenario.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "random.hpp"
#include "turncue/baselines.hpp"
#include "turncue/error.hpp"
#include "turncue/session.hpp"

namespace turncue {
namespace {

constexpr double kTableRadius = 1.2;
constexpr double kHeadHeight = 1.2;

std::int64_t to_ticks(double seconds, double dt) { return std::llround(seconds / dt); }

std::size_t method_index(Method m) { return static_cast<std::size_t>(m); }

}  // namespace

Vec3 ScenarioScript::position_of(int id) const {
    const auto n = static_cast<int>(seats.size());
    return seats[static_cast<std::size_t>((user_seat + id) % n)];
}

Vec3 ScenarioScript::table_center() const {
    Vec3 c;
    for (const auto& s : seats) c += s;
    return c * (1.0 / static_cast<double>(seats.size()));
}

std::string ScenarioScript::name_of(int id) const {
    if (id == kUserId) return "Charlie";
    const auto i = static_cast<std::size_t>(id - 1);
    return i < agent_names.size() ? agent_names[i] : "Agent " + std::to_string(id);
}

void ScenarioScript::validate() const {
    auto fail = [](const std::string& msg) { throw ValidationError("scenario: " + msg); };
    if (seats.size() < 2) fail("need at least two seats");
    if (user_seat < 0 || user_seat >= static_cast<int>(seats.size())) fail("user_seat out of range");
    for (std::size_t i = 0; i < seats.size(); ++i) {
        for (std::size_t j = i + 1; j < seats.size(); ++j) {
            if (seats[i] == seats[j]) fail("seats " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        }
    }
    if (!(signal_offset > 0.0)) fail("signal_offset must be > 0");
    if (turns.empty()) fail("turn order is empty");
    const int agents = agent_count();
    auto is_agent = [agents](int id) { return id >= 1 && id <= agents; };
    for (std::size_t i = 0; i < turns.size(); ++i) {
        const Turn& t = turns[i];
        const std::string where = "turn " + std::to_string(i);
        if (t.speaker < 0 || t.speaker > agents) fail(where + ": unknown speaker id " + std::to_string(t.speaker));
        if (!(t.duration > 0.0)) fail(where + ": duration must be > 0");
        if (t.signaled) {
            if (i == 0) fail(where + ": the first turn cannot be claimed by a signal");
            if (!is_agent(t.speaker)) fail(where + ": only agents can signal");
            if (turns[i - 1].speaker == t.speaker) fail(where + ": speaker signals during their own turn");
        }
    }
    if (!agent_names.empty() && static_cast<int>(agent_names.size()) != agents) {
        fail("expected " + std::to_string(agents) + " agent names");
    }
    if (!agent_skins.empty() && static_cast<int>(agent_skins.size()) != agents) {
        fail("expected " + std::to_string(agents) + " agent skins");
    }
    if (!is_agent(in_view_agent)) fail("in_view_agent must be an agent id");
    if (!is_agent(out_of_view_agent)) fail("out_of_view_agent must be an agent id");
    if (in_view_agent == out_of_view_agent) fail("in_view_agent and out_of_view_agent must differ");
    for (int id : {in_view_agent, out_of_view_agent}) {
        bool claims = false;
        for (const Turn& t : turns) claims = claims || (t.signaled && t.speaker == id);
        if (!claims) fail("agent " + std::to_string(id) + " is designated but never signals");
    }
}

std::vector<Vec3> default_seats() {
    std::vector<Vec3> seats;
    for (int i = 0; i <= kAgentCount; ++i) {
        const double a = i * 2.0 * std::numbers::pi / (kAgentCount + 1);
        seats.push_back({kTableRadius * std::sin(a), kHeadHeight, kTableRadius * std::cos(a)});
    }
    return seats;
}

ScenarioScript default_script(Role role, Method method, int user_seat) {
    // Relative to the user looking at the table center, agents 1 and 5 sit 60
    // degrees off to either side (outside a 45 degree viewport), agents 2 and 4
    // at 30 degrees, agent 3 straight across.
    ScenarioScript s;
    s.seats = default_seats();
    s.user_seat = user_seat;
    s.role = role;
    s.method = method;
    s.agent_names = {"Alex", "Blake", "Casey", "Drew", "Emery"};
    s.agent_skins = {0, 1, 2, 3, 4};
    if (role == Role::Listener) {
        // The user opens with a question, agent 3 answers, agent 5 (beside the
        // user) claims the floor, then agent 4 next to them.
        s.turns = {{kUserId, 20.0, false}, {3, 20.0, false}, {5, 20.0, true}, {4, 20.0, true}, {kUserId, 20.0, false}};
        s.out_of_view_agent = 5;
        s.in_view_agent = 4;
    } else {
        // Agent 3 asks the user, agent 1 interjects while the user talks, asks
        // the user back, and agent 2 interjects in turn.
        s.turns = {{3, 20.0, false}, {kUserId, 20.0, false}, {1, 20.0, true}, {kUserId, 20.0, false}, {2, 20.0, true}};
        s.out_of_view_agent = 1;
        s.in_view_agent = 2;
    }
    s.desk_anchor = default_desk_anchor(s);
    return s;
}

Vec3 default_desk_anchor(const ScenarioScript& script) {
    const Vec3 user = script.position_of(kUserId);
    const Vec3 to_center = script.table_center() - user;
    const Vec3 inward = length(to_center) > 0.0 ? normalized(to_center) : Vec3{0.0, 0.0, 1.0};
    return user + inward * 0.45 + Vec3{0.0, -0.35, 0.0};
}

GazeAgentModel::Latency& GazeAgentModel::latency_for(Method method, bool in_view) noexcept {
    return latency[method_index(method)][in_view ? 1 : 0];
}

const GazeAgentModel::Latency& GazeAgentModel::latency_for(Method method, bool in_view) const noexcept {
    return latency[method_index(method)][in_view ? 1 : 0];
}

void GazeAgentModel::validate() const {
    if (!(head_speed > 0.0)) throw ConfigError("agent.head_speed", "must be > 0");
    if (!(gaze_speed > 0.0)) throw ConfigError("agent.gaze_speed", "must be > 0");
    if (!(gaze_lead >= 0.0 && gaze_lead < 180.0)) throw ConfigError("agent.gaze_lead", "must lie in [0, 180)");
    for (const auto& per_method : latency) {
        for (const auto& l : per_method) {
            if (!(l.mean >= 0.0)) throw ConfigError("agent.latency", "mean must be >= 0");
            if (!(l.jitter >= 0.0)) throw ConfigError("agent.latency", "jitter must be >= 0");
        }
    }
}

namespace {

class Simulation {
public:
    Simulation(const ScenarioScript& script, const GazeAgentModel& agent, const GuidanceConfig& config, double dt,
               std::uint64_t seed)
        : script_(script), agent_(agent), dt_(dt), rng_(seed), session_(config, script.method) {}

    ScenarioResult run() {
        const Vec3 user = script_.position_of(kUserId);
        pose_.position = user;
        pose_.head_forward = normalized(fixation_point() - user);
        pose_.gaze_forward = pose_.head_forward;
        start_turn(0, 0);

        for (std::int64_t k = 0;; ++k) {
            pose_.timestamp = static_cast<double>(k) * dt_;
            if (k >= turn_end_tick_ && !next_is_signaled()) {
                if (turn_index_ + 1 == script_.turns.size()) break;
                start_turn(turn_index_ + 1, k);
            }
            if (signal_tick_ && k == *signal_tick_) fire_signal();

            const SessionPhase before = session_.phase();
            const CueFrame frame = session_.tick(pose_, target_pos_, dt_);
            if (before == SessionPhase::Signaled && frame.phase != SessionPhase::Signaled) {
                resolve_signal();
                start_turn(turn_index_ + 1, k);
            }
            result_.trace.push_back(record(static_cast<std::uint64_t>(k), frame));
            step_agent();
        }
        return std::move(result_);
    }

private:
    bool next_is_signaled() const {
        return turn_index_ + 1 < script_.turns.size() && script_.turns[turn_index_ + 1].signaled;
    }

    void start_turn(std::size_t index, std::int64_t k) {
        if (index > 0 && script_.turns[turn_index_].speaker != kUserId) {
            last_agent_speaker_ = script_.turns[turn_index_].speaker;
        }
        turn_index_ = index;
        turn_end_tick_ = k + to_ticks(script_.turns[index].duration, dt_);
        signal_tick_.reset();
        if (next_is_signaled()) signal_tick_ = k + to_ticks(script_.signal_offset, dt_);
    }

    void fire_signal() {
        target_id_ = script_.turns[turn_index_ + 1].speaker;
        target_pos_ = script_.position_of(target_id_);
        if (session_.phase() != SessionPhase::Idle) session_.reset();
        session_.begin_signal(pose_, target_pos_, script_.role);
        const bool in_view = session_.target_in_view_at_signal();
        const auto& l = agent_.latency_for(script_.method, in_view);
        const double u = detail::uniform01(rng_);
        latency_ = std::max(0.0, l.mean + l.jitter * (2.0 * u - 1.0));
        signal_time_ = pose_.timestamp;
        signal_tick_.reset();
    }

    void resolve_signal() {
        SessionOutcome o;
        o.method = script_.method;
        o.role = script_.role;
        o.in_view = session_.target_in_view_at_signal();
        o.target = target_id_;
        o.signal_time = quantize(signal_time_);
        if (auto rt = session_.response_time()) o.response_time = quantize(*rt);
        result_.outcomes.push_back(o);
    }

    Vec3 fixation_point() const {
        const int speaker = script_.turns[turn_index_].speaker;
        if (speaker != kUserId) return script_.position_of(speaker);
        if (last_agent_speaker_) return script_.position_of(*last_agent_speaker_);
        return script_.table_center();
    }

    void step_agent() {
        Vec3 look_at = fixation_point();
        if (session_.phase() == SessionPhase::Signaled && pose_.timestamp - signal_time_ + 1e-9 >= latency_) {
            look_at = target_pos_;
        }
        const Vec3 desired = normalized(look_at - pose_.position);
        pose_.head_forward = rotate_towards(pose_.head_forward, desired, agent_.head_speed * dt_);
        const Vec3 gaze_goal = rotate_towards(pose_.head_forward, desired, agent_.gaze_lead);
        pose_.gaze_forward = rotate_towards(pose_.gaze_forward, gaze_goal, agent_.gaze_speed * dt_);
    }

    TraceRecord record(std::uint64_t k, const CueFrame& frame) const {
        TraceRecord r;
        r.tick = k;
        r.timestamp = pose_.timestamp;
        r.speaker = script_.turns[turn_index_].speaker;
        r.method = script_.method;
        r.role = script_.role;
        r.pose = pose_;
        r.phase = frame.phase;
        r.target = target_id_;
        if (frame.phase != SessionPhase::Idle) {
            r.target_in_view = session_.target_in_view_at_signal();
            r.signal_time = signal_time_;
            if (const auto* s = std::get_if<state::Signaled>(&session_.state())) r.dwell = s->dwell;
            r.response_time = session_.response_time();
        }
        r.env_intensity = frame.env_intensity;
        r.point = frame.point;
        r.spot = frame.spot;
        r.sound = frame.sound;
        r.duck_gain = frame.duck_gain;

        const Vec3 target = target_id_ > 0 ? target_pos_ : script_.table_center();
        r.text_icon = text_icon_state(script_.method == Method::TextIcon ? frame.phase : SessionPhase::Idle, target,
                                      target_id_ > 0 ? script_.name_of(target_id_) : "", script_.desk_anchor);
        r.sgd = sgd_state(script_.method == Method::Sgd ? frame.phase : SessionPhase::Idle, pose_, target,
                          pose_.timestamp, session_.config().ack_threshold);
        return quantized(std::move(r));
    }

    const ScenarioScript& script_;
    const GazeAgentModel& agent_;
    double dt_;
    std::mt19937_64 rng_;
    GuidanceSession session_;
    ScenarioResult result_;

    Pose pose_;
    std::size_t turn_index_ = 0;
    std::int64_t turn_end_tick_ = 0;
    std::optional<std::int64_t> signal_tick_;
    std::optional<int> last_agent_speaker_;
    int target_id_ = -1;
    Vec3 target_pos_;
    double signal_time_ = 0.0;
    double latency_ = 0.0;
};

}  // namespace

ScenarioResult run_scenario(const ScenarioScript& script, const GazeAgentModel& agent, const GuidanceConfig& config,
                            double dt, std::uint64_t seed) {
    if (!(dt > 0.0 && dt <= 0.1)) throw ValidationError("dt must lie in (0, 0.1]");
    script.validate();
    agent.validate();
    config.validate();
    return Simulation(script, agent, config, dt, seed).run();
}

}  // namespace turncue
