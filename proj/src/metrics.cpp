#include "turncue/metrics.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "turncue/error.hpp"

namespace turncue {
namespace {

bool transition_allowed(SessionPhase from, SessionPhase to) {
    using P = SessionPhase;
    switch (from) {
        case P::Idle: return to == P::Idle || to == P::Signaled;
        case P::Signaled: return to != P::Idle;
        case P::Acknowledged: return to != P::Missed;
        case P::Missed: return to != P::Acknowledged;
    }
    return false;
}

}  // namespace

std::size_t MetricsSummary::total_sessions() const noexcept {
    std::size_t total = 0;
    for (const auto& [key, stats] : cells) total += stats.n;
    return total;
}

std::vector<SessionOutcome> session_outcomes(std::span<const TraceRecord> trace) {
    std::vector<SessionOutcome> outcomes;
    SessionPhase prev = SessionPhase::Idle;
    std::optional<double> active_signal;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const TraceRecord& r = trace[i];
        if (r.tick != i) throw IntegrityError(r.tick, "tick index not contiguous (expected " + std::to_string(i) + ")");
        if (!transition_allowed(prev, r.phase)) {
            throw IntegrityError(r.tick, std::string("illegal transition ") + to_string(prev) + " -> " +
                                             to_string(r.phase));
        }
        if (r.phase != SessionPhase::Idle && (!r.signal_time || !r.target_in_view)) {
            throw IntegrityError(r.tick, "session record without signal time or view");
        }
        const bool new_signal = r.phase == SessionPhase::Signaled &&
                                (prev != SessionPhase::Signaled || r.signal_time != active_signal);
        if (new_signal && prev == SessionPhase::Signaled) {
            throw IntegrityError(r.tick, "new signal before the previous one resolved");
        }
        if (new_signal) active_signal = r.signal_time;

        const bool resolved = prev == SessionPhase::Signaled &&
                              (r.phase == SessionPhase::Acknowledged || r.phase == SessionPhase::Missed);
        if (resolved) {
            if (r.signal_time != active_signal) throw IntegrityError(r.tick, "signal time changed mid-session");
            SessionOutcome o;
            o.method = r.method;
            o.role = r.role;
            o.in_view = *r.target_in_view;
            o.target = r.target;
            o.signal_time = *r.signal_time;
            if (r.phase == SessionPhase::Acknowledged) {
                if (!r.response_time) throw IntegrityError(r.tick, "acknowledged record without response time");
                o.response_time = r.response_time;
            }
            outcomes.push_back(o);
        }
        prev = r.phase;
    }
    return outcomes;
}

MetricsSummary summarize(std::span<const SessionOutcome> outcomes) {
    MetricsSummary summary;
    std::map<CellKey, double> sums;
    for (const auto& o : outcomes) {
        const CellKey key{o.method, o.in_view, o.role};
        CellStats& cell = summary.cells[key];
        ++cell.n;
        if (!o.response_time) {
            ++cell.missed;
            continue;
        }
        const double rt = *o.response_time;
        if (cell.acknowledged == 0) {
            cell.min_rt = rt;
            cell.max_rt = rt;
        } else {
            cell.min_rt = std::min(cell.min_rt, rt);
            cell.max_rt = std::max(cell.max_rt, rt);
        }
        ++cell.acknowledged;
        sums[key] += rt;
    }
    for (auto& [key, cell] : summary.cells) {
        if (cell.acknowledged > 0) cell.mean_rt = sums[key] / static_cast<double>(cell.acknowledged);
    }
    return summary;
}

MetricsSummary extract_metrics(std::span<const Trace> traces) {
    std::vector<SessionOutcome> all;
    for (const Trace& t : traces) {
        auto o = session_outcomes(t);
        all.insert(all.end(), o.begin(), o.end());
    }
    return summarize(all);
}

void write_metrics_csv(std::ostream& out, const MetricsSummary& summary) {
    out << "method,view,role,n,mean_rt,min_rt,max_rt,missed\n";
    for (const auto& [key, cell] : summary.cells) {
        out << to_string(key.method) << ',' << (key.in_view ? "in" : "out") << ',' << to_string(key.role) << ','
            << cell.n << ',';
        if (cell.acknowledged > 0) {
            out << format_number(cell.mean_rt) << ',' << format_number(cell.min_rt) << ',' << format_number(cell.max_rt);
        } else {
            out << ",,";
        }
        out << ',' << cell.missed << '\n';
    }
}

}  // namespace turncue
