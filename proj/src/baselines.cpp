#include "turncue/baselines.hpp"

#include <cmath>

namespace turncue {

TextIconState text_icon_state(SessionPhase phase, const Vec3& target, std::string_view speaker_name,
                              const Vec3& desk_anchor, double icon_height) {
    TextIconState s;
    s.panel_anchor = desk_anchor;
    s.icon_anchor = target + Vec3{0.0, icon_height, 0.0};
    if (phase == SessionPhase::Signaled) {
        s.panel_active = true;
        s.icon_active = true;
        s.panel_text = speaker_name;
    }
    return s;
}

bool sgd_phase_on(double now, double flicker_hz) noexcept {
    // Half-period boundaries land on exact multiples; the nudge keeps
    // k * dt timestamps that round just below a boundary on the right side.
    const auto half_periods = static_cast<long long>(std::floor(now * 2.0 * flicker_hz + 1e-9));
    return half_periods % 2 == 0;
}

SgdState sgd_state(SessionPhase phase, const Pose& pose, const Vec3& target, double now, double align_threshold,
                   double flicker_hz) {
    SgdState s;
    s.flicker_hz = flicker_hz;
    s.region_center = target;
    s.phase_on = sgd_phase_on(now, flicker_hz);
    if (phase == SessionPhase::Signaled) {
        const double dev = deviation_to_target(pose, target, DeviationReference::GazeToTarget, pose.gaze_forward);
        s.active = dev > align_threshold;
    }
    return s;
}

}  // namespace turncue
