#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "turncue/config.hpp"
#include "turncue/metrics.hpp"
#include "turncue/scenario.hpp"

namespace turncue {

inline constexpr int kTopicCount = 8;
inline constexpr int kTrialsPerParticipant = 8;

/// Balanced 4x4 Latin square over kAllMethods; row r is the method order of
/// every participant with index % 4 == r.
inline constexpr std::array<std::array<int, 4>, 4> kMethodLatinSquare{{
    {0, 1, 3, 2},
    {1, 2, 0, 3},
    {2, 3, 1, 0},
    {3, 0, 2, 1},
}};

struct Trial {
    int participant = 0;
    int index = 0;     // 0..7 presentation order
    int position = 0;  // 0..3 within the role block
    Role role = Role::Speaker;
    Method method = Method::LightAudio;
    int topic = 0;     // speaker topics 0..3, listener topics 4..7
    int user_seat = 0;
    std::vector<int> name_order;  // agent i gets names[name_order[i]]
    std::vector<int> skin_order;

    friend bool operator==(const Trial&, const Trial&) = default;
};

/// Within-subjects grid: every participant runs each method once per role.
struct StudyPlan {
    int participants = 1;
    std::array<int, 2> user_seats{0, 3};
    double turn_duration = 20.0;
    double signal_offset = 5.0;
    std::vector<std::string> names{"Alex", "Blake", "Casey", "Drew", "Emery"};
    std::vector<Trial> trials;  // filled by randomize_presentation

    /// Throws ValidationError.
    void validate() const;
};

/// Method order from the Latin square, role blocks alternating by participant,
/// user seat alternating by trial, and per-topic name/skin permutations drawn
/// from `seed`.
StudyPlan randomize_presentation(StudyPlan plan, std::uint64_t seed);

ScenarioScript script_for(const StudyPlan& plan, const Trial& trial);

struct TrialRun {
    Trial trial;
    ScenarioResult result;
};

struct SuiteResult {
    std::vector<TrialRun> runs;  // plan order
    MetricsSummary summary;
};

/// Runs every trial of a randomized plan. `threads` > 1 runs trials in
/// parallel; results are merged in plan order so output does not depend on it.
SuiteResult run_suite(const StudyPlan& plan, const GazeAgentModel& agent, const GuidanceConfig& config, double dt,
                      std::uint64_t seed, unsigned threads = 1);

}  // namespace turncue
