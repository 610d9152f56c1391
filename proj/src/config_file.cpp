#include "turncue/config_file.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "turncue/error.hpp"

namespace turncue {
namespace {

struct Entry {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

struct Section {
    std::string name;
    std::size_t line = 0;
    std::vector<Entry> entries;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') quoted = !quoted;
        if (!quoted && (s[i] == '#' || s[i] == ';')) return s.substr(0, i);
    }
    return s;
}

std::vector<Section> tokenize(std::string_view text) {
    std::vector<Section> sections;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
            const auto name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) throw ParseError(line_no, "empty section name");
            for (const auto& s : sections) {
                if (s.name == name) throw ParseError(line_no, "duplicate section [" + std::string(name) + "]");
            }
            sections.push_back({std::string(name), line_no, {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        if (sections.empty()) throw ParseError(line_no, "key outside of any section");
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw ParseError(line_no, "missing key before '='");
        auto value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        sections.back().entries.push_back({std::string(key), std::string(value), line_no});
    }
    return sections;
}

// Value conversions. All failures report the line.

double to_double(const Entry& e) {
    double v = 0.0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) throw ParseError(e.line, e.key + ": expected a number, got '" + e.value + "'");
    return v;
}

int to_int(const Entry& e) {
    int v = 0;
    const char* begin = e.value.data();
    const char* end = begin + e.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) throw ParseError(e.line, e.key + ": expected an integer, got '" + e.value + "'");
    return v;
}

bool to_bool(const Entry& e) {
    if (e.value == "true" || e.value == "yes" || e.value == "on") return true;
    if (e.value == "false" || e.value == "no" || e.value == "off") return false;
    throw ParseError(e.line, e.key + ": expected true or false, got '" + e.value + "'");
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t' || c == '(' || c == ')') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<double> numbers(const Entry& e, std::size_t expected) {
    std::vector<double> out;
    for (const auto& w : words(e.value)) out.push_back(to_double(Entry{e.key, w, e.line}));
    if (expected != 0 && out.size() != expected) {
        throw ParseError(e.line, e.key + ": expected " + std::to_string(expected) + " numbers");
    }
    return out;
}

Vec3 to_vec(const Entry& e) {
    const auto v = numbers(e, 3);
    return {v[0], v[1], v[2]};
}

ColorRGB to_color(const Entry& e) {
    const auto v = numbers(e, 3);
    return {v[0], v[1], v[2]};
}

Role to_role(const Entry& e) {
    if (e.value == "speaker") return Role::Speaker;
    if (e.value == "listener") return Role::Listener;
    throw ParseError(e.line, e.key + ": expected speaker or listener");
}

Method to_method(const Entry& e) {
    if (auto m = parse_method(e.value)) return *m;
    throw ParseError(e.line, e.key + ": expected one of light-audio, light, sgd, text-icon");
}

using Handler = std::function<void(const Entry&)>;

void dispatch(const Section& section, const std::map<std::string, Handler>& handlers,
              std::initializer_list<const char*> repeatable = {}) {
    std::map<std::string, std::size_t> seen;
    for (const Entry& e : section.entries) {
        const auto it = handlers.find(e.key);
        if (it == handlers.end()) {
            throw ParseError(e.line, "unknown key '" + e.key + "' in [" + section.name + "]");
        }
        bool repeats = false;
        for (const char* r : repeatable) repeats = repeats || e.key == r;
        if (!repeats && seen.count(e.key)) throw ParseError(e.line, "duplicate key '" + e.key + "'");
        seen[e.key] = e.line;
        it->second(e);
    }
}

void parse_lights(const Section& s, GuidanceConfig& c) {
    dispatch(s, {
                    {"env_min", [&](const Entry& e) { c.env.l_min = to_double(e); }},
                    {"env_max", [&](const Entry& e) { c.env.l_max = to_double(e); }},
                    {"env_gamma", [&](const Entry& e) { c.env_gamma = to_double(e); }},
                    {"env_fade", [&](const Entry& e) { c.env_fade = to_double(e); }},
                    {"point_warm", [&](const Entry& e) { c.point.warm = to_color(e); }},
                    {"point_cold", [&](const Entry& e) { c.point.cold = to_color(e); }},
                    {"point_gamma", [&](const Entry& e) { c.point.gamma = to_double(e); }},
                    {"point_azimuth", [&](const Entry& e) { c.point.azimuth = to_double(e); }},
                    {"point_radius", [&](const Entry& e) { c.point.radius = to_double(e); }},
                    {"spot_min", [&](const Entry& e) { c.spot.levels.l_min = to_double(e); }},
                    {"spot_max", [&](const Entry& e) { c.spot.levels.l_max = to_double(e); }},
                    {"spot_cone_min", [&](const Entry& e) { c.spot.geometry.a_min = to_double(e); }},
                    {"spot_cone_max", [&](const Entry& e) { c.spot.geometry.a_max = to_double(e); }},
                    {"spot_gamma", [&](const Entry& e) { c.spot.gamma = to_double(e); }},
                    {"spot_deactivate_at_min", [&](const Entry& e) { c.spot.deactivate_at_min = to_bool(e); }},
                    {"viewport_half_angle", [&](const Entry& e) { c.viewport_half_angle = to_double(e); }},
                });
}

void parse_audio(const Section& s, GuidanceConfig& c) {
    dispatch(s, {
                    {"duck_duration", [&](const Entry& e) { c.duck.duration = to_double(e); }},
                    {"duck_gain", [&](const Entry& e) { c.duck.ducked_gain = to_double(e); }},
                    {"chime_repeat_interval", [&](const Entry& e) { c.chime.repeat_interval = to_double(e); }},
                    {"chime_max_repeats", [&](const Entry& e) { c.chime.max_repeats = to_int(e); }},
                    {"chime_length", [&](const Entry& e) { c.chime.length = to_double(e); }},
                    {"subtlety_weight", [&](const Entry& e) { c.subtlety_weight = to_double(e); }},
                    {"sound_easing",
                     [&](const Entry& e) {
                         if (e.value == "linear") {
                             c.sound_easing = SoundEasing::Linear;
                         } else if (e.value == "cosine") {
                             c.sound_easing = SoundEasing::Cosine;
                         } else {
                             throw ParseError(e.line, "sound_easing: expected linear or cosine");
                         }
                     }},
                });
}

void parse_session(const Section& s, GuidanceConfig& c) {
    dispatch(s, {
                    {"theta_min", [&](const Entry& e) { c.theta_min = to_double(e); }},
                    {"min_theta_span", [&](const Entry& e) { c.min_theta_span = to_double(e); }},
                    {"ack_threshold", [&](const Entry& e) { c.ack_threshold = to_double(e); }},
                    {"ack_dwell", [&](const Entry& e) { c.ack_dwell = to_double(e); }},
                    {"miss_timeout", [&](const Entry& e) { c.miss_timeout = to_double(e); }},
                });
}

void parse_agent(const Section& s, GazeAgentModel& a) {
    dispatch(
        s,
        {
            {"head_speed", [&](const Entry& e) { a.head_speed = to_double(e); }},
            {"gaze_speed", [&](const Entry& e) { a.gaze_speed = to_double(e); }},
            {"gaze_lead", [&](const Entry& e) { a.gaze_lead = to_double(e); }},
            // latency = <method|*> <in|out|*> <mean> <jitter>
            {"latency",
             [&](const Entry& e) {
                 const auto w = words(e.value);
                 if (w.size() != 4) throw ParseError(e.line, "latency: expected '<method|*> <in|out|*> <mean> <jitter>'");
                 std::vector<Method> methods;
                 if (w[0] == "*") {
                     methods.assign(std::begin(kAllMethods), std::end(kAllMethods));
                 } else {
                     methods.push_back(to_method(Entry{e.key, w[0], e.line}));
                 }
                 std::vector<bool> views;
                 if (w[1] == "*") {
                     views = {true, false};
                 } else if (w[1] == "in" || w[1] == "out") {
                     views = {w[1] == "in"};
                 } else {
                     throw ParseError(e.line, "latency: view must be in, out or *");
                 }
                 const GazeAgentModel::Latency l{to_double(Entry{e.key, w[2], e.line}),
                                                 to_double(Entry{e.key, w[3], e.line})};
                 for (Method m : methods) {
                     for (bool v : views) a.latency_for(m, v) = l;
                 }
             }},
        },
        {"latency"});
}

void parse_scenario(const Section& s, std::optional<ScenarioScript>& out) {
    std::optional<Role> role;
    std::optional<Method> method;
    std::optional<int> user_seat;
    std::vector<Vec3> seats;
    std::vector<Turn> turns;
    std::vector<std::string> names;
    std::vector<int> skins;
    std::optional<double> signal_offset;
    std::optional<int> topic, in_view, out_of_view;
    std::optional<Vec3> desk;

    dispatch(s,
             {
                 {"role", [&](const Entry& e) { role = to_role(e); }},
                 {"method", [&](const Entry& e) { method = to_method(e); }},
                 {"user_seat", [&](const Entry& e) { user_seat = to_int(e); }},
                 {"seat", [&](const Entry& e) { seats.push_back(to_vec(e)); }},
                 // turn = <speaker id> <duration s> [signal]
                 {"turn",
                  [&](const Entry& e) {
                      const auto w = words(e.value);
                      if (w.size() < 2 || w.size() > 3 || (w.size() == 3 && w[2] != "signal")) {
                          throw ParseError(e.line, "turn: expected '<speaker> <duration> [signal]'");
                      }
                      turns.push_back({to_int(Entry{e.key, w[0], e.line}), to_double(Entry{e.key, w[1], e.line}),
                                       w.size() == 3});
                  }},
                 {"signal_offset", [&](const Entry& e) { signal_offset = to_double(e); }},
                 {"topic", [&](const Entry& e) { topic = to_int(e); }},
                 {"desk_anchor", [&](const Entry& e) { desk = to_vec(e); }},
                 {"name", [&](const Entry& e) { names.push_back(e.value); }},
                 {"skins",
                  [&](const Entry& e) {
                      for (const auto& w : words(e.value)) skins.push_back(to_int(Entry{e.key, w, e.line}));
                  }},
                 {"in_view_agent", [&](const Entry& e) { in_view = to_int(e); }},
                 {"out_of_view_agent", [&](const Entry& e) { out_of_view = to_int(e); }},
             },
             {"seat", "turn", "name"});

    ScenarioScript script = default_script(role.value_or(Role::Listener), method.value_or(Method::LightAudio),
                                           user_seat.value_or(0));
    if (!seats.empty()) {
        script.seats = seats;
        if (static_cast<int>(script.agent_names.size()) != script.agent_count()) script.agent_names.clear();
        if (static_cast<int>(script.agent_skins.size()) != script.agent_count()) script.agent_skins.clear();
    }
    if (!turns.empty()) script.turns = turns;
    if (!names.empty()) script.agent_names = names;
    if (!skins.empty()) script.agent_skins = skins;
    if (signal_offset) script.signal_offset = *signal_offset;
    if (topic) script.topic = *topic;
    if (in_view) script.in_view_agent = *in_view;
    if (out_of_view) script.out_of_view_agent = *out_of_view;
    script.validate();
    script.desk_anchor = desk ? *desk : default_desk_anchor(script);
    out = std::move(script);
}

void parse_plan(const Section& s, std::optional<StudyPlan>& out) {
    StudyPlan plan;
    std::vector<std::string> names;
    dispatch(s,
             {
                 {"participants", [&](const Entry& e) { plan.participants = to_int(e); }},
                 {"user_seats",
                  [&](const Entry& e) {
                      const auto v = numbers(e, 2);
                      plan.user_seats = {static_cast<int>(v[0]), static_cast<int>(v[1])};
                  }},
                 {"turn_duration", [&](const Entry& e) { plan.turn_duration = to_double(e); }},
                 {"signal_offset", [&](const Entry& e) { plan.signal_offset = to_double(e); }},
                 {"name", [&](const Entry& e) { names.push_back(e.value); }},
             },
             {"name"});
    if (!names.empty()) plan.names = names;
    plan.validate();
    out = std::move(plan);
}

}  // namespace

ConfigBundle parse_config(std::string_view text) {
    ConfigBundle bundle;
    const auto sections = tokenize(text);
    for (const Section& s : sections) {
        if (s.name == "lights") {
            parse_lights(s, bundle.guidance);
        } else if (s.name == "audio") {
            parse_audio(s, bundle.guidance);
        } else if (s.name == "session") {
            parse_session(s, bundle.guidance);
        } else if (s.name == "agent") {
            parse_agent(s, bundle.agent);
        } else if (s.name == "scenario") {
            parse_scenario(s, bundle.scenario);
        } else if (s.name == "plan") {
            parse_plan(s, bundle.plan);
        } else {
            throw ParseError(s.line, "unknown section [" + s.name + "]");
        }
    }
    bundle.guidance.validate();
    bundle.agent.validate();
    return bundle;
}

ConfigBundle load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace turncue
