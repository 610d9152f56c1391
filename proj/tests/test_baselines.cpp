#include <doctest.h>

#include "turncue/baselines.hpp"

using namespace turncue;

TEST_CASE("text-icon notification") {
    const Vec3 target{1, 1.2, 0};
    const Vec3 desk{0, 0.8, 0.4};
    const TextIconState s = text_icon_state(SessionPhase::Signaled, target, "Alex", desk);
    CHECK(s.panel_active);
    CHECK(s.panel_text == "Alex");
    CHECK(s.panel_anchor == desk);
    CHECK(s.icon_active);
    CHECK(s.icon_anchor.y > target.y);
    CHECK(s.icon_anchor.x == target.x);

    for (auto p : {SessionPhase::Idle, SessionPhase::Acknowledged, SessionPhase::Missed}) {
        const TextIconState off = text_icon_state(p, target, "Alex", desk);
        CHECK_FALSE(off.panel_active);
        CHECK_FALSE(off.icon_active);
        CHECK(off.panel_text.empty());
    }
}

TEST_CASE("sgd square wave") {
    CHECK(sgd_phase_on(0.01));
    CHECK_FALSE(sgd_phase_on(0.06));
    CHECK(sgd_phase_on(0.10));
    CHECK(sgd_phase_on(0.0));
    CHECK_FALSE(sgd_phase_on(0.05));
    CHECK_FALSE(sgd_phase_on(0.125, 4.0));
    CHECK(sgd_phase_on(0.25, 4.0));
}

TEST_CASE("sgd activation") {
    const Vec3 target{0, 0, 2};
    Pose pose;
    pose.gaze_forward = {1, 0, 0};
    const SgdState far = sgd_state(SessionPhase::Signaled, pose, target, 0.01, 10.0);
    CHECK(far.active);
    CHECK(far.phase_on);
    CHECK(far.flicker_hz == 10.0);
    CHECK(far.region_center == target);

    pose.gaze_forward = normalized(yaw({0, 0, 1}, 2.0));
    CHECK_FALSE(sgd_state(SessionPhase::Signaled, pose, target, 0.01, 10.0).active);

    pose.gaze_forward = {1, 0, 0};
    CHECK_FALSE(sgd_state(SessionPhase::Idle, pose, target, 0.01, 10.0).active);
    CHECK_FALSE(sgd_state(SessionPhase::Acknowledged, pose, target, 0.01, 10.0).active);
}

TEST_CASE("sgd on-fraction over frame-sampled windows") {
    const double dt = 1.0 / 72.0;
    for (int start = 0; start < 200; ++start) {
        int on = 0;
        for (int k = 0; k < 72; ++k) on += sgd_phase_on((start + k) * dt) ? 1 : 0;
        CHECK(std::abs(on - 36) <= 1);
    }
}
