#include "turncue/study.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "random.hpp"
#include "turncue/error.hpp"

namespace turncue {

void StudyPlan::validate() const {
    if (participants < 0) throw ValidationError("plan: participants must be >= 0");
    if (!(turn_duration > 0.0)) throw ValidationError("plan: turn_duration must be > 0");
    if (!(signal_offset > 0.0)) throw ValidationError("plan: signal_offset must be > 0");
    if (static_cast<int>(names.size()) != kAgentCount) {
        throw ValidationError("plan: expected " + std::to_string(kAgentCount) + " agent names");
    }
    for (int seat : user_seats) {
        if (seat < 0 || seat > kAgentCount) throw ValidationError("plan: user seat out of range");
    }
    if (user_seats[0] == user_seats[1]) throw ValidationError("plan: the two user seats must differ");
}

StudyPlan randomize_presentation(StudyPlan plan, std::uint64_t seed) {
    plan.validate();
    plan.trials.clear();
    for (int p = 0; p < plan.participants; ++p) {
        const auto& order = kMethodLatinSquare[static_cast<std::size_t>(p % 4)];
        const Role first = p % 2 == 0 ? Role::Speaker : Role::Listener;
        const Role second = first == Role::Speaker ? Role::Listener : Role::Speaker;
        for (int index = 0; index < kTrialsPerParticipant; ++index) {
            Trial t;
            t.participant = p;
            t.index = index;
            t.position = index % 4;
            t.role = index < 4 ? first : second;
            t.method = kAllMethods[order[static_cast<std::size_t>(t.position)]];
            t.topic = (t.role == Role::Speaker ? 0 : 4) + t.position;
            t.user_seat = plan.user_seats[static_cast<std::size_t>((index + p) % 2)];

            std::mt19937_64 rng(detail::mix_seed(seed, static_cast<std::uint64_t>(p),
                                                 static_cast<std::uint64_t>(t.topic)));
            t.name_order.resize(kAgentCount);
            std::iota(t.name_order.begin(), t.name_order.end(), 0);
            detail::shuffle(t.name_order, rng);
            t.skin_order.resize(kAgentCount);
            std::iota(t.skin_order.begin(), t.skin_order.end(), 0);
            detail::shuffle(t.skin_order, rng);
            plan.trials.push_back(std::move(t));
        }
    }
    return plan;
}

ScenarioScript script_for(const StudyPlan& plan, const Trial& trial) {
    ScenarioScript s = default_script(trial.role, trial.method, trial.user_seat);
    s.signal_offset = plan.signal_offset;
    s.topic = trial.topic;
    for (Turn& turn : s.turns) turn.duration = plan.turn_duration;
    for (std::size_t i = 0; i < s.agent_names.size() && i < trial.name_order.size(); ++i) {
        s.agent_names[i] = plan.names[static_cast<std::size_t>(trial.name_order[i])];
    }
    if (trial.skin_order.size() == s.agent_skins.size()) s.agent_skins = trial.skin_order;
    return s;
}

SuiteResult run_suite(const StudyPlan& plan, const GazeAgentModel& agent, const GuidanceConfig& config, double dt,
                      std::uint64_t seed, unsigned threads) {
    plan.validate();
    agent.validate();
    config.validate();

    std::vector<ScenarioScript> scripts;
    scripts.reserve(plan.trials.size());
    for (const Trial& t : plan.trials) {
        scripts.push_back(script_for(plan, t));
        scripts.back().validate();
    }

    SuiteResult suite;
    suite.runs.resize(plan.trials.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (std::size_t i = next++; i < scripts.size() && !failed; i = next++) {
            try {
                const Trial& t = plan.trials[i];
                const std::uint64_t trial_seed = detail::mix_seed(seed, static_cast<std::uint64_t>(t.participant),
                                                                  static_cast<std::uint64_t>(t.index) + 1000);
                suite.runs[i] = TrialRun{t, run_scenario(scripts[i], agent, config, dt, trial_seed)};
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };

    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(scripts.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SessionOutcome> outcomes;
    for (const TrialRun& run : suite.runs) {
        outcomes.insert(outcomes.end(), run.result.outcomes.begin(), run.result.outcomes.end());
    }
    suite.summary = summarize(outcomes);
    return suite;
}

}  // namespace turncue
