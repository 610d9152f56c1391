#pragma once

#include <optional>
#include <string_view>

#include "turncue/audio.hpp"
#include "turncue/lights.hpp"

namespace turncue {

/// The four guidance conditions compared in the study.
enum class Method { LightAudio, Light, Sgd, TextIcon };

inline constexpr Method kAllMethods[] = {Method::LightAudio, Method::Light, Method::Sgd, Method::TextIcon};

const char* to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view text) noexcept;

struct Channels {
    bool lights = false;
    bool audio = false;
};

constexpr Channels channels_for(Method method) noexcept {
    switch (method) {
        case Method::LightAudio: return {true, true};
        case Method::Light: return {true, false};
        default: return {false, false};
    }
}

/// Every tunable parameter of the cue channels and the acknowledgment logic.
/// Defaults are the values used in the evaluation study.
struct GuidanceConfig {
    // [lights]
    LightLevels env{0.5, 1.1};
    double env_gamma = 1.0;
    double env_fade = 2.0;
    PointLightParams point;
    SpotlightParams spot;
    double viewport_half_angle = 45.0;

    // [audio]
    DuckEnvelope duck{0.0, 2.0, 0.5};
    ChimePolicy chime;
    SoundEasing sound_easing = SoundEasing::Linear;
    /// Scales duck depth and chime repeat count; 1 leaves both as configured.
    double subtlety_weight = 1.0;

    // [session]
    double theta_min = 0.0;
    /// Smallest theta_max - theta_min allowed when a range is captured.
    double min_theta_span = 1.0;
    double ack_threshold = 10.0;
    double ack_dwell = 1.5;
    double miss_timeout = 5.0;

    /// Throws ConfigError naming the first violated field.
    void validate() const;

    DuckEnvelope effective_duck() const noexcept;
    ChimePolicy effective_chime() const noexcept;
};

}  // namespace turncue
