#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "otto_lgi/config.hpp"
#include "otto_lgi/otto_cycle.hpp"
#include "otto_lgi/report.hpp"

using namespace otto_lgi;
using nlohmann::json;
namespace fs = std::filesystem;

#ifndef OTTO_LGI_SOURCE_DIR
#error "OTTO_LGI_SOURCE_DIR must point at the source tree"
#endif

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "otto-lgi");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / "otto_lgi_cli_tests";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const fs::path source_dir{OTTO_LGI_SOURCE_DIR};

}

TEST_CASE("k3 subcommand") {
    const auto r = run({"k3", "--omega", "20", "--gamma", "0", "--t-max", "0.31415926535897931", "--n", "6001"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,K3");
    double peak = -10.0;
    int rows = 0;
    while (std::getline(in, line)) {
        peak = std::max(peak, report::parse_double(line.substr(line.find(',') + 1)));
        ++rows;
    }
    CHECK(rows == 6001);
    CHECK(peak == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("tau-q subcommand") {
    auto r = run({"tau-q", "--omega", "20", "--gamma", "0"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["tau_q"] == "unbounded");

    r = run({"tau-q", "--omega", "20", "--gamma", "1"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["tau_q"].get<double>() == lgi::quantum_time(20.0, 1.0).value());

    r = run({"tau-q", "--omega", "20", "--gamma", "1", "--format", "csv"});
    CHECK(r.out.rfind("key,value\n", 0) == 0);

    r = run({"tau-q", "--omega", "-1", "--gamma", "1"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.err)["error"] == "DomainError");
}

TEST_CASE("cycle subcommand") {
    SUBCASE("frictionless reference engine") {
        const auto cfg = write_file("c0.cfg", read_file(source_dir / "configs/sigma_sweep.cfg") + "T_h = 20\nsigma_bar = 0\n");
        const auto r = run({"cycle", "--config", cfg.string()});
        REQUIRE(r.code == 0);
        const auto j = json::parse(r.out);
        CHECK(j["feasible"] == true);
        CHECK(j["tau_h"].get<double>() == 0.0);
        CHECK(j["tau_c"].get<double>() == 0.0);
        // (omega2 - omega1) Delta P^eq (1-x)(1-y)/(1-xy) vanishes at x = y = 1
        CHECK(j["W_out"].get<double>() == 0.0);
        CHECK(j["corners"].is_null());
    }
    SUBCASE("with friction") {
        const auto cfg = write_file("c1.cfg", read_file(source_dir / "configs/sigma_sweep.cfg") + "T_h = 20\nsigma_bar = 0.2\n");
        const auto r = run({"cycle", "--config", cfg.string()});
        REQUIRE(r.code == 0);
        const auto j = json::parse(r.out);
        const double x = j["x"], y = j["y"];
        EngineParams p = config::load_config(cfg.string()).engine_with_T_h();
        CHECK(j["W_total"].get<double>() == cycle::total_work(p, x, y));
        CHECK(std::abs(j["W_total"].get<double>() + j["Q_h"].get<double>() + j["Q_c"].get<double>()) < 1e-12);
        CHECK(j["params"]["gamma0"] == 10.0);
    }
    SUBCASE("infeasible engine exits 2 with a record") {
        const auto cfg = write_file("c2.cfg", "T_h = 1.5\n");
        const auto r = run({"cycle", "--config", cfg.string()});
        CHECK(r.code == 2);
        CHECK(json::parse(r.out)["status"] == "no_engine");
    }
    SUBCASE("missing T_h") {
        const auto cfg = write_file("c3.cfg", "omega1 = 10\n");
        const auto r = run({"cycle", "--config", cfg.string()});
        CHECK(r.code == 1);
        CHECK(json::parse(r.err)["error"] == "MissingRequired");
    }
    SUBCASE("config errors carry the line") {
        const auto cfg = write_file("c4.cfg", "# x\nomega1 = -3\n");
        const auto r = run({"cycle", "--config", cfg.string()});
        CHECK(r.code == 1);
        const auto e = json::parse(r.err);
        CHECK(e["error"] == "BadValue");
        CHECK(e["line"] == 2);
        CHECK(e["key"] == "omega1");
    }
}

TEST_CASE("sweep subcommands") {
    const fs::path golden = source_dir / "tests/golden";
    const std::string prefix = (scratch() / "tiny").string();
    const auto r = run({"sweep-sigma", "--config", (golden / "tiny_sweep.cfg").string(), "--output", prefix});
    REQUIRE(r.code == 0);
    const auto summary = json::parse(r.out);
    CHECK(summary.contains("regime_c1"));
    CHECK(summary.contains("regime_c2"));

    // schema and values pinned by golden files
    CHECK(read_file(prefix + ".json") == read_file(golden / "tiny_sweep.json"));
    CHECK(read_file(prefix + ".csv") == read_file(golden / "tiny_sweep.csv"));

    std::ifstream csv(prefix + ".csv");
    const auto back = report::read_phase_csv(csv);
    CHECK(back.rows.size() == 40);

    SUBCASE("--grid overrides the config counts") {
        const auto g = run({"sweep-sigma", "--config", (golden / "tiny_sweep.cfg").string(), "--grid", "3x2",
                            "--output", prefix + "_g"});
        REQUIRE(g.code == 0);
        std::ifstream in(prefix + "_g.csv");
        CHECK(report::read_phase_csv(in).rows.size() == 6);
    }
    SUBCASE("T_c sweep") {
        const auto t = run({"sweep-tc", "--config", (golden / "tiny_sweep.cfg").string(), "--grid", "4x3",
                            "--output", prefix + "_tc"});
        REQUIRE(t.code == 0);
        CHECK(json::parse(t.out)["y_axis"]["name"] == "T_c");
    }
    SUBCASE("bad grid") {
        const auto b = run({"sweep-sigma", "--config", (golden / "tiny_sweep.cfg").string(), "--grid", "3by2"});
        CHECK(b.code == 1);
        CHECK(json::parse(b.err)["error"] == "UsageError");
    }
}

TEST_CASE("oracle-check subcommand") {
    const auto cfg = write_file("o.cfg", "T_h = 20\nT_c = 1\ngamma0 = 1\n");
    const auto r = run({"oracle-check", "--config", cfg.string()});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["max_rel_error"].get<double>() < 1e-6);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"k3", "--omega", "20"}).code == 1);
    const auto r = run({"tau-q", "--omega", "abc", "--gamma", "1"});
    CHECK(r.code == 1);
    CHECK(json::parse(r.err)["error"] == "UsageError");
}
