#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "turncue/baselines.hpp"
#include "turncue/config.hpp"
#include "turncue/session.hpp"

namespace turncue {

/// One simulation tick: pose, session state and every cue channel.
/// Angles are degrees, positions meters.
struct TraceRecord {
    std::uint64_t tick = 0;
    double timestamp = 0.0;
    int speaker = 0;  // current turn holder; 0 is the user
    Method method = Method::LightAudio;
    Role role = Role::Listener;
    Pose pose;

    SessionPhase phase = SessionPhase::Idle;
    int target = -1;                    // new speaker id, -1 before the first signal
    std::optional<bool> target_in_view; // captured at signal time
    std::optional<double> signal_time;
    double dwell = 0.0;
    std::optional<double> response_time;

    double env_intensity = 0.0;
    PointLightState point;
    SpotlightState spot;
    SoundSourceState sound;
    double duck_gain = 1.0;
    TextIconState text_icon;
    SgdState sgd;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

using Trace = std::vector<TraceRecord>;

/// Shortest of %.9g formatting; the number format used in traces and CSVs.
std::string format_number(double v);

/// Rounds to 9 significant decimal digits, the precision traces are written with.
double quantize(double v) noexcept;

/// Applies quantize() to every floating-point field so the record survives a
/// write/read cycle unchanged.
TraceRecord quantized(TraceRecord record);

std::string format_record(const TraceRecord& record);

/// Throws ParseError (with `line_no`) on malformed input.
TraceRecord parse_record(std::string_view line, std::size_t line_no = 1);

void write_trace(std::ostream& out, std::span<const TraceRecord> records);
/// Throws IoError naming the path.
void write_trace_file(const std::filesystem::path& path, std::span<const TraceRecord> records);

Trace read_trace(std::istream& in);
Trace read_trace_file(const std::filesystem::path& path);

}  // namespace turncue
