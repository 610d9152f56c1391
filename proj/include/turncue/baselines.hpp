#pragma once

#include <string>
#include <string_view>

#include "turncue/geometry.hpp"
#include "turncue/session.hpp"

namespace turncue {

/// World-fixed raise-hand notification: a text panel at the user's desk plus
/// a hand icon above the new speaker.
struct TextIconState {
    bool panel_active = false;
    Vec3 panel_anchor;
    std::string panel_text;
    bool icon_active = false;
    Vec3 icon_anchor;

    friend bool operator==(const TextIconState&, const TextIconState&) = default;
};

/// Subtle Gaze Direction: square-wave flicker over the target region that
/// stops once the gaze is close enough.
struct SgdState {
    bool active = false;
    double flicker_hz = 10.0;
    Vec3 region_center;
    bool phase_on = false;

    friend bool operator==(const SgdState&, const SgdState&) = default;
};

inline constexpr double kIconHeight = 0.35;  // meters above the target head

TextIconState text_icon_state(SessionPhase phase, const Vec3& target, std::string_view speaker_name,
                              const Vec3& desk_anchor, double icon_height = kIconHeight);

/// On-phase iff floor(now * 2 * flicker_hz) is even.
bool sgd_phase_on(double now, double flicker_hz = 10.0) noexcept;

SgdState sgd_state(SessionPhase phase, const Pose& pose, const Vec3& target, double now, double align_threshold,
                   double flicker_hz = 10.0);

}  // namespace turncue
