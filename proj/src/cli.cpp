#include "turncue/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "turncue/audio.hpp"
#include "turncue/config_file.hpp"
#include "turncue/error.hpp"
#include "turncue/lights.hpp"
#include "turncue/metrics.hpp"
#include "turncue/scenario.hpp"
#include "turncue/study.hpp"
#include "turncue/trace.hpp"

namespace turncue {
namespace {

namespace fs = std::filesystem;

struct EvalOptions {
    std::string channel = "env";
    double theta_min = 0.0;
    double theta_max = 90.0;
    int steps = 10;
    std::optional<double> gamma;
    std::string config;
};

struct SimulateOptions {
    std::string script;
    std::uint64_t seed = 0;
    double dt = kDefaultDt;
    std::string out;
};

struct SuiteOptions {
    std::string plan;
    std::optional<int> participants;
    std::uint64_t seed = 0;
    double dt = kDefaultDt;
    unsigned threads = 1;
    std::string out_dir = "suite_out";
};

struct MetricsOptions {
    std::vector<std::string> traces;
};

int run_eval(const EvalOptions& o, std::ostream& out) {
    const GuidanceConfig cfg = o.config.empty() ? GuidanceConfig{} : load_config_file(o.config).guidance;
    if (o.steps < 1) throw ConfigError("steps", "must be >= 1");
    const AngularRange range(o.theta_min, o.theta_max);

    auto n = [](double v) { return format_number(v); };
    if (o.channel == "env") {
        out << "theta,intensity\n";
    } else if (o.channel == "point") {
        out << "theta,r,g,b\n";
    } else if (o.channel == "spot") {
        out << "theta,intensity,cone\n";
    } else if (o.channel == "sound") {
        out << "theta,fraction\n";
    } else {
        throw ConfigError("channel", "must be one of env, point, spot, sound");
    }
    for (int i = 0; i <= o.steps; ++i) {
        const double theta = std::lerp(o.theta_min, o.theta_max, static_cast<double>(i) / o.steps);
        out << n(theta);
        if (o.channel == "env") {
            out << ',' << n(env_light_intensity(theta, range, cfg.env, o.gamma.value_or(cfg.env_gamma)));
        } else if (o.channel == "point") {
            const ColorRGB c =
                point_light_color(theta, range, cfg.point.warm, cfg.point.cold, o.gamma.value_or(cfg.point.gamma));
            out << ',' << n(c.r) << ',' << n(c.g) << ',' << n(c.b);
        } else if (o.channel == "spot") {
            const double p = normalized_progress(theta, range, o.gamma.value_or(cfg.spot.gamma));
            cfg.spot.levels.validate("lights.spot");
            cfg.spot.geometry.validate("lights.spot_cone");
            out << ',' << n(std::lerp(cfg.spot.levels.l_min, cfg.spot.levels.l_max, p)) << ','
                << n(std::lerp(cfg.spot.geometry.a_min, cfg.spot.geometry.a_max, p));
        } else {
            out << ',' << n(sound_path_fraction(theta, range, cfg.sound_easing));
        }
        out << '\n';
    }
    return kExitOk;
}

int run_simulate(const SimulateOptions& o, std::ostream& out) {
    const ConfigBundle bundle = load_config_file(o.script);
    if (!bundle.scenario) throw ValidationError(o.script + ": no [scenario] section");
    const ScenarioResult result = run_scenario(*bundle.scenario, bundle.agent, bundle.guidance, o.dt, o.seed);
    if (o.out.empty() || o.out == "-") {
        write_trace(out, result.trace);
    } else {
        write_trace_file(o.out, result.trace);
    }
    return kExitOk;
}

std::string trace_name(const Trial& t) {
    std::ostringstream name;
    name << 'p' << std::setw(3) << std::setfill('0') << t.participant << "_t" << t.index << '_' << to_string(t.role)
         << '_' << to_string(t.method) << ".jsonl";
    return name.str();
}

int run_suite_cmd(const SuiteOptions& o, std::ostream& out) {
    const ConfigBundle bundle = load_config_file(o.plan);
    StudyPlan plan = bundle.plan.value_or(StudyPlan{});
    if (o.participants) plan.participants = *o.participants;
    plan = randomize_presentation(plan, o.seed);
    const SuiteResult suite = run_suite(plan, bundle.agent, bundle.guidance, o.dt, o.seed, o.threads);

    std::error_code ec;
    fs::create_directories(o.out_dir, ec);
    if (ec) throw IoError(o.out_dir, ec.message());
    for (const TrialRun& run : suite.runs) {
        write_trace_file(fs::path(o.out_dir) / trace_name(run.trial), run.result.trace);
    }
    const fs::path csv = fs::path(o.out_dir) / "metrics.csv";
    std::ofstream f(csv, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError(csv.string(), "cannot open for writing");
    write_metrics_csv(f, suite.summary);
    if (!f) throw IoError(csv.string(), "write failed");
    write_metrics_csv(out, suite.summary);
    return kExitOk;
}

int run_metrics(const MetricsOptions& o, std::ostream& out) {
    std::vector<Trace> traces;
    for (const auto& path : o.traces) traces.push_back(read_trace_file(path));
    write_metrics_csv(out, extract_metrics(traces));
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Turn-taking attention guidance: cue evaluation and scenario replay", "turncue"};
    app.require_subcommand(1);

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "Sweep theta for one cue channel and print CSV");
    eval_cmd->add_option("--channel", eval.channel, "env | point | spot | sound")->capture_default_str();
    eval_cmd->add_option("--theta-min", eval.theta_min, "Lower end of the angular range (deg)")->capture_default_str();
    eval_cmd->add_option("--theta-max", eval.theta_max, "Upper end of the angular range (deg)")->capture_default_str();
    eval_cmd->add_option("--steps", eval.steps, "Number of intervals; prints steps + 1 rows")->capture_default_str();
    eval_cmd->add_option("--gamma", eval.gamma, "Curvature override; default is the channel's configured gamma");
    eval_cmd->add_option("--config", eval.config, "Config file with [lights]/[audio] overrides");

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Replay one scenario script and write its JSON Lines trace");
    sim_cmd->add_option("--script", sim.script, "Config file with a [scenario] section")->required();
    sim_cmd->add_option("--seed", sim.seed, "Gaze agent seed")->capture_default_str();
    sim_cmd->add_option("--dt", sim.dt, "Fixed step (s)")->capture_default_str();
    sim_cmd->add_option("--out", sim.out, "Trace path; standard output when omitted");

    SuiteOptions suite;
    auto* suite_cmd = app.add_subcommand("suite", "Run a counterbalanced study plan");
    suite_cmd->add_option("--plan", suite.plan, "Config file (the [plan] section is optional)")->required();
    suite_cmd->add_option("--participants", suite.participants, "Override the plan's participant count");
    suite_cmd->add_option("--seed", suite.seed, "Randomization and agent seed")->capture_default_str();
    suite_cmd->add_option("--dt", suite.dt, "Fixed step (s)")->capture_default_str();
    suite_cmd->add_option("--threads", suite.threads, "Scenarios run in parallel")->capture_default_str();
    suite_cmd->add_option("--out-dir", suite.out_dir, "Directory for traces and metrics.csv")->capture_default_str();

    MetricsOptions metrics;
    auto* metrics_cmd = app.add_subcommand("metrics", "Summarize response times from trace files");
    metrics_cmd->add_option("traces", metrics.traces, "Trace files (JSON Lines)")->required();

    std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }

    try {
        if (*eval_cmd) return run_eval(eval, out);
        if (*sim_cmd) return run_simulate(sim, out);
        if (*suite_cmd) return run_suite_cmd(suite, out);
        if (*metrics_cmd) return run_metrics(metrics, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    err << app.help();
    return kExitValidation;
}

}  // namespace turncue
