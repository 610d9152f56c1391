#include <doctest.h>

#include <sstream>

#include "oracle/cue_oracle.hpp"
#include "turncue/error.hpp"
#include "turncue/scenario.hpp"

using namespace turncue;

namespace {

// User at the origin facing agent 1 straight ahead; agent 2 is 90 degrees to the right.
ScenarioScript right_angle_script() {
    ScenarioScript s;
    s.seats = {{0, 1.2, 0}, {0, 1.2, 2}, {2, 1.2, 0}};
    s.turns = {{1, 20.0, false}, {2, 20.0, true}, {1, 20.0, true}};
    s.agent_names = {"Alex", "Blake"};
    s.agent_skins = {0, 1};
    s.in_view_agent = 1;
    s.out_of_view_agent = 2;
    s.desk_anchor = default_desk_anchor(s);
    return s;
}

GazeAgentModel fixed_agent(double latency) {
    GazeAgentModel a;
    for (auto& row : a.latency) {
        for (auto& l : row) l = {latency, 0.0};
    }
    return a;
}

}  // namespace

TEST_CASE("default seats and scripts") {
    const auto seats = default_seats();
    CHECK(seats.size() == 6);
    for (Role role : {Role::Listener, Role::Speaker}) {
        for (int seat = 0; seat < 6; ++seat) {
            const ScenarioScript s = default_script(role, Method::Light, seat);
            CHECK_NOTHROW(s.validate());
            CHECK(s.agent_count() == kAgentCount);
            CHECK(s.position_of(kUserId) == seats[static_cast<std::size_t>(seat)]);
        }
    }
    const ScenarioScript s = default_script(Role::Listener);
    CHECK(s.name_of(kUserId) == "Charlie");
    CHECK(s.name_of(1) == "Alex");
    CHECK(s.table_center().y == doctest::Approx(1.2));
    CHECK(s.table_center().x == doctest::Approx(0.0));
}

TEST_CASE("script validation") {
    ScenarioScript s = default_script(Role::Listener);
    SUBCASE("unknown speaker") { s.turns[1].speaker = 9; }
    SUBCASE("non-positive duration") { s.turns[0].duration = 0.0; }
    SUBCASE("empty turns") { s.turns.clear(); }
    SUBCASE("user signals") { s.turns[4].signaled = true; }
    SUBCASE("first turn signaled") { s.turns[0].signaled = true; }
    SUBCASE("name count") { s.agent_names.pop_back(); }
    SUBCASE("duplicate seat") { s.seats[1] = s.seats[0]; }
    SUBCASE("designated agent never signals") { s.in_view_agent = 2; }
    CHECK_THROWS_AS(s.validate(), ValidationError);
    CHECK_THROWS_AS(run_scenario(s, GazeAgentModel{}, GuidanceConfig{}, kDefaultDt, 1), ValidationError);
}

TEST_CASE("run_scenario rejects bad timesteps and agents") {
    const ScenarioScript s = default_script(Role::Listener);
    CHECK_THROWS_AS(run_scenario(s, GazeAgentModel{}, GuidanceConfig{}, 0.0, 1), ValidationError);
    CHECK_THROWS_AS(run_scenario(s, GazeAgentModel{}, GuidanceConfig{}, 0.5, 1), ValidationError);
    GazeAgentModel bad;
    bad.head_speed = 0.0;
    CHECK_THROWS_AS(run_scenario(s, bad, GuidanceConfig{}, kDefaultDt, 1), ConfigError);
}

TEST_CASE("default listener scenario produces one out-of-view and one in-view session") {
    const ScenarioResult r = run_scenario(default_script(Role::Listener), GazeAgentModel{}, GuidanceConfig{},
                                          kDefaultDt, 42);
    REQUIRE(r.outcomes.size() == 2);
    CHECK_FALSE(r.outcomes[0].in_view);
    CHECK(r.outcomes[0].target == 5);
    CHECK(r.outcomes[1].in_view);
    CHECK(r.outcomes[1].target == 4);
    for (const auto& o : r.outcomes) {
        REQUIRE(o.response_time);
        CHECK(*o.response_time > 0.0);
        CHECK(*o.response_time < 5.0);
    }
    // Signals come 5 s into the turn before the claimed one.
    CHECK(r.outcomes[0].signal_time == doctest::Approx(25.0).epsilon(1e-9));
    for (std::size_t i = 0; i < r.trace.size(); ++i) CHECK(r.trace[i].tick == i);
}

TEST_CASE("speaker scenario ducks nobody") {
    const ScenarioResult r = run_scenario(default_script(Role::Speaker), GazeAgentModel{}, GuidanceConfig{},
                                          kDefaultDt, 3);
    REQUIRE(r.outcomes.size() == 2);
    for (const auto& rec : r.trace) CHECK(rec.duck_gain == 1.0);
}

TEST_CASE("closed-form alignment with a zero-jitter agent") {
    const double dt = kDefaultDt;
    const ScenarioResult r = run_scenario(right_angle_script(), fixed_agent(0.3), GuidanceConfig{}, dt, 1);
    REQUIRE(r.outcomes.size() == 2);
    REQUIRE(r.outcomes[0].response_time);
    const double expected = oracle::alignment_onset(0.3, 90.0, 120.0, GuidanceConfig{}.ack_threshold);
    // One tick to notice the latency has elapsed, one for the last partial step.
    CHECK(std::abs(*r.outcomes[0].response_time - expected) <= 2.0 * dt);
}

TEST_CASE("pathological latency times out and hands off") {
    const double dt = kDefaultDt;
    const ScenarioResult r = run_scenario(right_angle_script(), fixed_agent(10.0), GuidanceConfig{}, dt, 1);
    REQUIRE(r.outcomes.size() == 2);
    CHECK_FALSE(r.outcomes[0].response_time);
    const double miss_time = r.outcomes[0].signal_time + 5.0;
    bool handed_off = false;
    for (const auto& rec : r.trace) {
        if (rec.phase == SessionPhase::Missed && rec.target == 2 && !handed_off) {
            CHECK(std::abs(rec.timestamp - miss_time) <= dt);
            CHECK(rec.speaker == 2);
            handed_off = true;
        }
    }
    CHECK(handed_off);
}

TEST_CASE("same seed gives identical traces, different seeds differ") {
    const ScenarioScript s = default_script(Role::Listener);
    const ScenarioResult a = run_scenario(s, GazeAgentModel{}, GuidanceConfig{}, kDefaultDt, 7);
    const ScenarioResult b = run_scenario(s, GazeAgentModel{}, GuidanceConfig{}, kDefaultDt, 7);
    const ScenarioResult c = run_scenario(s, GazeAgentModel{}, GuidanceConfig{}, kDefaultDt, 8);
    CHECK(a.trace == b.trace);
    CHECK(a.outcomes == b.outcomes);
    CHECK(a.outcomes != c.outcomes);
}

TEST_CASE("baseline channels appear only for their method") {
    for (Method m : kAllMethods) {
        const ScenarioResult r = run_scenario(default_script(Role::Listener, m), GazeAgentModel{}, GuidanceConfig{},
                                              kDefaultDt, 9);
        bool icon = false, sgd = false, light = false;
        for (const auto& rec : r.trace) {
            icon = icon || rec.text_icon.panel_active;
            sgd = sgd || rec.sgd.active;
            light = light || rec.point.active || rec.spot.active;
        }
        CHECK(icon == (m == Method::TextIcon));
        CHECK(sgd == (m == Method::Sgd));
        CHECK(light == (m == Method::LightAudio || m == Method::Light));
    }
}
