#include <doctest.h>

#include <sstream>

#include "turncue/error.hpp"
#include "turncue/metrics.hpp"
#include "turncue/study.hpp"

using namespace turncue;

namespace {

TraceRecord rec(std::uint64_t tick, SessionPhase phase) {
    TraceRecord r;
    r.tick = tick;
    r.timestamp = static_cast<double>(tick);
    r.method = Method::Light;
    r.role = Role::Listener;
    r.phase = phase;
    if (phase != SessionPhase::Idle) {
        r.target = 2;
        r.target_in_view = false;
        r.signal_time = 1.0;
    }
    return r;
}

Trace acknowledged_trace(double rt) {
    Trace t{rec(0, SessionPhase::Idle), rec(1, SessionPhase::Signaled), rec(2, SessionPhase::Signaled),
            rec(3, SessionPhase::Acknowledged), rec(4, SessionPhase::Acknowledged)};
    t[3].response_time = rt;
    t[4].response_time = rt;
    return t;
}

Trace missed_trace() {
    return {rec(0, SessionPhase::Idle), rec(1, SessionPhase::Signaled), rec(2, SessionPhase::Missed)};
}

const CellKey kCell{Method::Light, false, Role::Listener};

}  // namespace

TEST_CASE("one acknowledged trace") {
    const std::vector<Trace> traces{acknowledged_trace(2.0)};
    const MetricsSummary m = extract_metrics(traces);
    REQUIRE(m.cells.count(kCell) == 1);
    const CellStats& c = m.cells.at(kCell);
    CHECK(c.n == 1);
    CHECK(c.mean_rt == 2.0);
    CHECK(c.missed == 0);
}

TEST_CASE("one missed trace") {
    const std::vector<Trace> traces{missed_trace()};
    const CellStats& c = extract_metrics(traces).cells.at(kCell);
    CHECK(c.missed == 1);
    CHECK(c.acknowledged == 0);
    std::ostringstream csv;
    write_metrics_csv(csv, extract_metrics(traces));
    CHECK(csv.str() == "method,view,role,n,mean_rt,min_rt,max_rt,missed\nlight,out,listener,1,,,,1\n");
}

TEST_CASE("summary statistics") {
    const std::vector<Trace> traces{acknowledged_trace(1.0), acknowledged_trace(3.0), missed_trace()};
    const CellStats& c = extract_metrics(traces).cells.at(kCell);
    CHECK(c.n == 3);
    CHECK(c.acknowledged == 2);
    CHECK(c.missed == 1);
    CHECK(c.mean_rt == 2.0);
    CHECK(c.min_rt == 1.0);
    CHECK(c.max_rt == 3.0);
}

TEST_CASE("integrity errors name the tick") {
    SUBCASE("illegal transition") {
        Trace t{rec(0, SessionPhase::Idle), rec(1, SessionPhase::Acknowledged)};
        t[1].response_time = 1.0;
        try {
            session_outcomes(t);
            FAIL("expected an integrity error");
        } catch (const IntegrityError& e) {
            CHECK(e.tick() == 1);
        }
    }
    SUBCASE("gap in ticks") {
        Trace t{rec(0, SessionPhase::Idle), rec(2, SessionPhase::Idle)};
        CHECK_THROWS_AS(session_outcomes(t), IntegrityError);
    }
    SUBCASE("acknowledged without response time") {
        Trace t = acknowledged_trace(1.0);
        t[3].response_time.reset();
        CHECK_THROWS_AS(session_outcomes(t), IntegrityError);
    }
    SUBCASE("signaled record without signal time") {
        Trace t = missed_trace();
        t[1].signal_time.reset();
        CHECK_THROWS_AS(session_outcomes(t), IntegrityError);
    }
}

TEST_CASE("replayed suite matches live outcomes") {
    StudyPlan plan;
    plan.participants = 1;
    plan = randomize_presentation(plan, 2);
    const SuiteResult suite = run_suite(plan, GazeAgentModel{}, GuidanceConfig{}, 1.0 / 30.0, 2, 2);
    std::vector<Trace> traces;
    for (const auto& run : suite.runs) {
        CHECK(session_outcomes(run.result.trace) == run.result.outcomes);
        traces.push_back(run.result.trace);
    }
    const MetricsSummary replayed = extract_metrics(traces);
    CHECK(replayed == suite.summary);
    CHECK(replayed.total_sessions() == 16);
}
