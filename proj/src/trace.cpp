#include "turncue/trace.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include <json.hpp>

#include "turncue/error.hpp"

namespace turncue {
namespace {

using nlohmann::json;

constexpr int kDigits = 9;

void append_number(std::string& out, double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, kDigits);
    out.append(buf.data(), end);
}

void append_int(std::string& out, long long v) {
    std::array<char, 24> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    out.append(buf.data(), end);
}

void append_bool(std::string& out, bool v) { out += v ? "true" : "false"; }

void append_string(std::string& out, std::string_view s) { out += json(std::string(s)).dump(); }

void append_vec(std::string& out, const Vec3& v) {
    out += '[';
    append_number(out, v.x);
    out += ',';
    append_number(out, v.y);
    out += ',';
    append_number(out, v.z);
    out += ']';
}

void append_color(std::string& out, const ColorRGB& c) { append_vec(out, {c.r, c.g, c.b}); }

void append_opt(std::string& out, const std::optional<double>& v) {
    if (v) {
        append_number(out, *v);
    } else {
        out += "null";
    }
}

// Field appender: writes `,"name":` (without the comma for the first field).
struct Fields {
    std::string& out;
    bool first = true;

    std::string& key(const char* name) {
        if (!first) out += ',';
        first = false;
        out += '"';
        out += name;
        out += "\":";
        return out;
    }
};

Vec3 vec_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ColorRGB color_from(const json& j) {
    const Vec3 v = vec_from(j);
    return {v.x, v.y, v.z};
}

std::optional<double> opt_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

template <class Enum, class Parser>
Enum enum_from(const json& j, Parser parse, const char* what) {
    const auto parsed = parse(j.get<std::string>());
    if (!parsed) throw std::invalid_argument(std::string("unknown ") + what + " '" + j.get<std::string>() + "'");
    return *parsed;
}

std::optional<Role> parse_role_name(std::string_view s) {
    if (s == "speaker") return Role::Speaker;
    if (s == "listener") return Role::Listener;
    return std::nullopt;
}

std::optional<Side> parse_side_name(std::string_view s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    return std::nullopt;
}

Vec3 quantized(const Vec3& v) { return {quantize(v.x), quantize(v.y), quantize(v.z)}; }

}  // namespace

std::string format_number(double v) {
    std::string out;
    append_number(out, v);
    return out;
}

double quantize(double v) noexcept {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, kDigits);
    double out = v;
    std::from_chars(buf.data(), end, out);
    return out;
}

TraceRecord quantized(TraceRecord r) {
    r.timestamp = quantize(r.timestamp);
    r.pose.position = quantized(r.pose.position);
    r.pose.head_forward = quantized(r.pose.head_forward);
    r.pose.gaze_forward = quantized(r.pose.gaze_forward);
    r.pose.timestamp = r.timestamp;
    if (r.signal_time) r.signal_time = quantize(*r.signal_time);
    r.dwell = quantize(r.dwell);
    if (r.response_time) r.response_time = quantize(*r.response_time);
    r.env_intensity = quantize(r.env_intensity);
    r.point.position = quantized(r.point.position);
    r.point.color = {quantize(r.point.color.r), quantize(r.point.color.g), quantize(r.point.color.b)};
    r.spot.intensity = quantize(r.spot.intensity);
    r.spot.cone_angle = quantize(r.spot.cone_angle);
    r.spot.aim = quantized(r.spot.aim);
    r.sound.position = quantized(r.sound.position);
    r.duck_gain = quantize(r.duck_gain);
    r.text_icon.panel_anchor = quantized(r.text_icon.panel_anchor);
    r.text_icon.icon_anchor = quantized(r.text_icon.icon_anchor);
    r.sgd.flicker_hz = quantize(r.sgd.flicker_hz);
    r.sgd.region_center = quantized(r.sgd.region_center);
    return r;
}

std::string format_record(const TraceRecord& r) {
    std::string out;
    out.reserve(900);
    out += '{';
    Fields f{out};
    append_int(f.key("tick"), static_cast<long long>(r.tick));
    append_number(f.key("t"), r.timestamp);
    append_int(f.key("speaker"), r.speaker);
    append_string(f.key("method"), to_string(r.method));
    append_string(f.key("role"), to_string(r.role));

    f.key("pose") += '{';
    {
        Fields g{out};
        append_vec(g.key("pos"), r.pose.position);
        append_vec(g.key("head"), r.pose.head_forward);
        append_vec(g.key("gaze"), r.pose.gaze_forward);
    }
    out += '}';

    f.key("session") += '{';
    {
        Fields g{out};
        append_string(g.key("state"), to_string(r.phase));
        append_int(g.key("target"), r.target);
        if (r.target_in_view) {
            append_string(g.key("view"), *r.target_in_view ? "in" : "out");
        } else {
            g.key("view") += "null";
        }
        append_opt(g.key("signal_time"), r.signal_time);
        append_number(g.key("dwell"), r.dwell);
        append_opt(g.key("response_time"), r.response_time);
    }
    out += '}';

    append_number(f.key("env"), r.env_intensity);

    f.key("point") += '{';
    {
        Fields g{out};
        append_bool(g.key("active"), r.point.active);
        append_string(g.key("side"), to_string(r.point.side));
        append_vec(g.key("pos"), r.point.position);
        append_color(g.key("color"), r.point.color);
    }
    out += '}';

    f.key("spot") += '{';
    {
        Fields g{out};
        append_bool(g.key("active"), r.spot.active);
        append_number(g.key("intensity"), r.spot.intensity);
        append_number(g.key("cone"), r.spot.cone_angle);
        append_vec(g.key("aim"), r.spot.aim);
    }
    out += '}';

    f.key("sound") += '{';
    {
        Fields g{out};
        append_bool(g.key("active"), r.sound.active);
        append_vec(g.key("pos"), r.sound.position);
        append_bool(g.key("chime"), r.sound.chime_active);
    }
    out += '}';

    append_number(f.key("duck"), r.duck_gain);

    f.key("text_icon") += '{';
    {
        Fields g{out};
        append_bool(g.key("panel"), r.text_icon.panel_active);
        append_string(g.key("text"), r.text_icon.panel_text);
        append_vec(g.key("panel_anchor"), r.text_icon.panel_anchor);
        append_bool(g.key("icon"), r.text_icon.icon_active);
        append_vec(g.key("icon_anchor"), r.text_icon.icon_anchor);
    }
    out += '}';

    f.key("sgd") += '{';
    {
        Fields g{out};
        append_bool(g.key("active"), r.sgd.active);
        append_number(g.key("hz"), r.sgd.flicker_hz);
        append_vec(g.key("center"), r.sgd.region_center);
        append_string(g.key("phase"), r.sgd.phase_on ? "on" : "off");
    }
    out += '}';

    out += '}';
    return out;
}

TraceRecord parse_record(std::string_view line, std::size_t line_no) {
    try {
        const json j = json::parse(line);
        TraceRecord r;
        r.tick = j.at("tick").get<std::uint64_t>();
        r.timestamp = j.at("t").get<double>();
        r.speaker = j.at("speaker").get<int>();
        r.method = enum_from<Method>(j.at("method"), parse_method, "method");
        r.role = enum_from<Role>(j.at("role"), parse_role_name, "role");

        const json& pose = j.at("pose");
        r.pose.position = vec_from(pose.at("pos"));
        r.pose.head_forward = vec_from(pose.at("head"));
        r.pose.gaze_forward = vec_from(pose.at("gaze"));
        r.pose.timestamp = r.timestamp;

        const json& s = j.at("session");
        r.phase = enum_from<SessionPhase>(s.at("state"), parse_phase, "session state");
        r.target = s.at("target").get<int>();
        if (const json& view = s.at("view"); !view.is_null()) {
            const auto v = view.get<std::string>();
            if (v != "in" && v != "out") throw std::invalid_argument("view must be \"in\", \"out\" or null");
            r.target_in_view = v == "in";
        }
        r.signal_time = opt_from(s.at("signal_time"));
        r.dwell = s.at("dwell").get<double>();
        r.response_time = opt_from(s.at("response_time"));

        r.env_intensity = j.at("env").get<double>();

        const json& point = j.at("point");
        r.point.active = point.at("active").get<bool>();
        r.point.side = enum_from<Side>(point.at("side"), parse_side_name, "side");
        r.point.position = vec_from(point.at("pos"));
        r.point.color = color_from(point.at("color"));

        const json& spot = j.at("spot");
        r.spot.active = spot.at("active").get<bool>();
        r.spot.intensity = spot.at("intensity").get<double>();
        r.spot.cone_angle = spot.at("cone").get<double>();
        r.spot.aim = vec_from(spot.at("aim"));

        const json& sound = j.at("sound");
        r.sound.active = sound.at("active").get<bool>();
        r.sound.position = vec_from(sound.at("pos"));
        r.sound.chime_active = sound.at("chime").get<bool>();

        r.duck_gain = j.at("duck").get<double>();

        const json& ti = j.at("text_icon");
        r.text_icon.panel_active = ti.at("panel").get<bool>();
        r.text_icon.panel_text = ti.at("text").get<std::string>();
        r.text_icon.panel_anchor = vec_from(ti.at("panel_anchor"));
        r.text_icon.icon_active = ti.at("icon").get<bool>();
        r.text_icon.icon_anchor = vec_from(ti.at("icon_anchor"));

        const json& sgd = j.at("sgd");
        r.sgd.active = sgd.at("active").get<bool>();
        r.sgd.flicker_hz = sgd.at("hz").get<double>();
        r.sgd.region_center = vec_from(sgd.at("center"));
        const auto phase = sgd.at("phase").get<std::string>();
        if (phase != "on" && phase != "off") throw std::invalid_argument("sgd phase must be \"on\" or \"off\"");
        r.sgd.phase_on = phase == "on";
        return r;
    } catch (const json::exception& e) {
        throw ParseError(line_no, e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

void write_trace(std::ostream& out, std::span<const TraceRecord> records) {
    std::string line;
    for (const auto& r : records) {
        line = format_record(r);
        line += '\n';
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
}

void write_trace_file(const std::filesystem::path& path, std::span<const TraceRecord> records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    write_trace(out, records);
    out.flush();
    if (!out) throw IoError(path.string(), "write failed");
}

Trace read_trace(std::istream& in) {
    Trace records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        records.push_back(parse_record(line, line_no));
    }
    return records;
}

Trace read_trace_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    return read_trace(in);
}

}  // namespace turncue
