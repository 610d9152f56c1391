#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "turncue/cli.hpp"
#include "turncue/trace.hpp"

using namespace turncue;

namespace fs = std::filesystem;

namespace {

const std::string kConfigs = std::string(TURNCUE_SOURCE_DIR) + "/configs/";

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "turncue");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path(TURNCUE_BINARY_DIR) / "cli_scratch" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("eval env sweep") {
    const Run r = cli({"eval", "--channel", "env", "--theta-max", "90", "--steps", "10"});
    CHECK(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == "theta,intensity");
    CHECK(rows[1] == "0,0.5");
    CHECK(rows[6] == "45,0.8");
    CHECK(rows[11] == "90,1.1");
}

TEST_CASE("eval other channels") {
    CHECK(cli({"eval", "--channel", "point", "--steps", "2"}).out ==
          "theta,r,g,b\n0,1,1,1\n45,1,0.951,0.6295\n90,1,0.902,0.259\n");
    CHECK(cli({"eval", "--channel", "spot", "--steps", "2"}).out == "theta,intensity,cone\n0,0.8,30\n45,1.15,45\n90,1.5,60\n");
    CHECK(cli({"eval", "--channel", "sound", "--steps", "2"}).out == "theta,fraction\n0,1\n45,0.5\n90,0\n");
    CHECK(cli({"eval", "--channel", "env", "--steps", "2", "--gamma", "2"}).out == "theta,intensity\n0,0.5\n45,0.65\n90,1.1\n");
}

TEST_CASE("eval errors") {
    CHECK(cli({"eval", "--channel", "smell"}).code == kExitValidation);
    CHECK(cli({"eval", "--gamma", "-1"}).code == kExitValidation);
    CHECK(cli({"eval", "--theta-min", "50", "--theta-max", "20"}).code == kExitValidation);
    CHECK(cli({"eval", "--config", "/nonexistent.cfg"}).code == kExitIo);
}

TEST_CASE("usage errors") {
    const Run r = cli({"dance"});
    CHECK(r.code == kExitValidation);
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(cli({}).code == kExitValidation);
    CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("simulate is deterministic") {
    const fs::path dir = scratch("simulate");
    const std::string a = (dir / "a.jsonl").string();
    const std::string b = (dir / "b.jsonl").string();
    CHECK(cli({"simulate", "--script", kConfigs + "listener.cfg", "--seed", "7", "--out", a}).code == kExitOk);
    CHECK(cli({"simulate", "--script", kConfigs + "listener.cfg", "--seed", "7", "--out", b}).code == kExitOk);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
    CHECK(cli({"simulate", "--script", kConfigs + "default.cfg"}).code == kExitValidation);
    CHECK(cli({"simulate", "--script", kConfigs + "listener.cfg", "--out", "/nonexistent/x.jsonl"}).code == kExitIo);
}

TEST_CASE("suite with one participant, then metrics over its traces") {
    const fs::path dir = scratch("suite");
    const Run r = cli({"suite", "--plan", kConfigs + "plan.cfg", "--participants", "1", "--seed", "3", "--dt", "0.05",
                       "--threads", "2", "--out-dir", dir.string()});
    REQUIRE(r.code == kExitOk);
    std::vector<std::string> traces;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".jsonl") traces.push_back(e.path().string());
    }
    CHECK(traces.size() == 8);
    CHECK(slurp(dir / "metrics.csv") == r.out);
    CHECK(r.out.rfind("method,view,role,n,mean_rt,min_rt,max_rt,missed\n", 0) == 0);

    std::sort(traces.begin(), traces.end());
    std::vector<std::string> args{"metrics"};
    args.insert(args.end(), traces.begin(), traces.end());
    const Run m = cli(args);
    CHECK(m.code == kExitOk);
    CHECK(m.out == r.out);
}

TEST_CASE("metrics errors") {
    const fs::path dir = scratch("metrics");
    const fs::path bad = dir / "bad.jsonl";
    std::ofstream(bad) << "{\n";
    CHECK(cli({"metrics", bad.string()}).code == kExitValidation);
    CHECK(cli({"metrics", (dir / "missing.jsonl").string()}).code == kExitIo);
}
