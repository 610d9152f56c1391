#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "turncue/config.hpp"
#include "turncue/trace.hpp"

namespace turncue {

/// Result of one guidance session.
struct SessionOutcome {
    Method method = Method::LightAudio;
    Role role = Role::Listener;
    bool in_view = false;
    int target = -1;
    double signal_time = 0.0;
    std::optional<double> response_time;  // absent when missed

    friend bool operator==(const SessionOutcome&, const SessionOutcome&) = default;
};

struct CellKey {
    Method method;
    bool in_view;
    Role role;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct CellStats {
    std::size_t n = 0;  // acknowledged + missed
    std::size_t acknowledged = 0;
    std::size_t missed = 0;
    double mean_rt = 0.0;
    double min_rt = 0.0;
    double max_rt = 0.0;

    friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct MetricsSummary {
    std::map<CellKey, CellStats> cells;

    std::size_t total_sessions() const noexcept;
    friend bool operator==(const MetricsSummary&, const MetricsSummary&) = default;
};

/// Reads session results off the state transitions of a trace. Throws
/// IntegrityError naming the first tick that breaks the state machine.
std::vector<SessionOutcome> session_outcomes(std::span<const TraceRecord> trace);

/// Aggregates in the given order; identical input order gives identical sums.
MetricsSummary summarize(std::span<const SessionOutcome> outcomes);

MetricsSummary extract_metrics(std::span<const Trace> traces);

/// Header: method,view,role,n,mean_rt,min_rt,max_rt,missed. Cells with no
/// acknowledged sessions leave the response-time columns empty.
void write_metrics_csv(std::ostream& out, const MetricsSummary& summary);

}  // namespace turncue
