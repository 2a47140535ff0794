#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>

#include "otto_lgi/config.hpp"
#include "otto_lgi/lgi.hpp"
#include "otto_lgi/lindblad_oracle.hpp"
#include "otto_lgi/otto_cycle.hpp"
#include "otto_lgi/phase_sweep.hpp"
#include "otto_lgi/report.hpp"

namespace otto_lgi::cli {

namespace {

using nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InfeasibleCycle:
    case ErrorKind::NoFixedPoint:
    case ErrorKind::DegenerateDenominator:
    case ErrorKind::NoQuantumPhase:
        return exit_infeasible;
    default:
        return exit_usage;
    }
}

unsigned threads_from_env() {
    const char* env = std::getenv("OTTO_LGI_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    const std::string_view s(env);
    unsigned n{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(ErrorKind::Usage, "OTTO_LGI_THREADS must be a non-negative integer");
    return n;
}

void emit_record(std::ostream& out, const ordered_json& record, config::OutputFormat fmt) {
    if (fmt == config::OutputFormat::Csv) report::write_record_csv(out, record);
    else out << record.dump() << '\n';
}

config::OutputFormat resolve_format(const std::string& flag, config::OutputFormat fallback) {
    if (flag.empty()) return fallback;
    return flag == "csv" ? config::OutputFormat::Csv : config::OutputFormat::Json;
}

// "200x150" -> (200, 150)
std::pair<std::size_t, std::size_t> parse_grid(const std::string& g) {
    const auto sep = g.find('x');
    auto num = [&](std::string_view s) {
        std::size_t n{};
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec != std::errc{} || ptr != s.data() + s.size() || n < 2)
            fail(ErrorKind::Usage, "--grid expects NxM with N, M >= 2, got '" + g + "'");
        return n;
    };
    if (sep == std::string::npos) fail(ErrorKind::Usage, "--grid expects NxM, got '" + g + "'");
    const std::string_view v(g);
    return {num(v.substr(0, sep)), num(v.substr(sep + 1))};
}

sweep::SweepOptions sweep_options(const config::RunConfig& cfg) {
    sweep::SweepOptions o;
    o.classify.cycle.equal_gamma = cfg.equal_gamma;
    o.classify.lgi.tol = cfg.tol;
    o.classify.lgi.points_per_period = cfg.points_per_period;
    o.threads = threads_from_env();
    return o;
}

int run_sweep(const config::RunConfig& cfg, sweep::AxisParam y_param, const std::string& grid,
              std::string prefix, std::ostream& out) {
    const config::GridSpec& yg = y_param == sweep::AxisParam::SigmaBar ? cfg.sigma_bar_grid : cfg.T_c_grid;
    sweep::Axis x{sweep::AxisParam::T_h, cfg.T_h_grid.min, cfg.T_h_grid.max, cfg.T_h_grid.count};
    sweep::Axis y{y_param, yg.min, yg.max, yg.count};
    if (!grid.empty()) std::tie(x.count, y.count) = parse_grid(grid);

    // T_h is swept, so any configured value is only a placeholder.
    const EngineParams base = cfg.engine(cfg.T_h_grid.min);
    const sweep::PhaseDiagram d = sweep::sweep(base, x, y, sweep_options(cfg));
    const ordered_json summary = report::phase_summary_json(d);

    if (prefix.empty()) prefix = y_param == sweep::AxisParam::SigmaBar ? "phase_sigma" : "phase_tc";
    {
        std::ofstream csv(prefix + ".csv", std::ios::binary);
        if (!csv) fail(ErrorKind::Usage, "cannot write '" + prefix + ".csv'");
        report::write_phase_csv(csv, d);
    }
    {
        std::ofstream js(prefix + ".json", std::ios::binary);
        if (!js) fail(ErrorKind::Usage, "cannot write '" + prefix + ".json'");
        js << summary.dump(2) << '\n';
    }
    out << summary.dump() << '\n';
    return exit_ok;
}

struct BranchCheck {
    double max_rel_error{};
    double steady_state_residual{};
};

// Analytic correlator against the RK4 regression-theorem oracle on [0, 10/gamma].
BranchCheck check_branch(double omega, double T, double gamma0) {
    const double gamma = damping_rate(omega, T, gamma0);
    constexpr std::size_t n = 401;
    std::vector<double> taus(n);
    for (std::size_t i = 0; i < n; ++i) taus[i] = 10.0 / gamma * static_cast<double>(i) / (n - 1);
    const auto numeric = oracle::correlation_numeric(omega, T, gamma0, taus);
    BranchCheck c;
    for (std::size_t i = 0; i < n; ++i) {
        const double envelope = std::exp(-0.5 * gamma * taus[i]);
        const double err = std::abs(numeric[i] - lgi::correlation_xx(taus[i], omega, gamma)) / envelope;
        c.max_rel_error = std::max(c.max_rel_error, err);
    }
    const auto rho = oracle::steady_state(omega, T, gamma0);
    c.steady_state_residual = oracle::lindblad_rhs(rho.elements(), omega, T, gamma0).frobenius_distance({});
    return c;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leggett-Garg quantumness of a finite-time qubit Otto engine"};
    app.require_subcommand(1);

    double omega = 0, gamma = 0, t_max = 0, tol = lgi::default_tolerance;
    std::size_t n = 1000;
    std::string config_path, format_flag, grid, prefix;

    auto* k3 = app.add_subcommand("k3", "K3(t) samples as CSV (t,K3)");
    k3->add_option("--omega", omega, "precession frequency")->required();
    k3->add_option("--gamma", gamma, "damping rate")->required();
    k3->add_option("--t-max", t_max, "last sample time (default: three periods)");
    k3->add_option("--n", n, "number of samples")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));

    auto* tq = app.add_subcommand("tau-q", "quantum time for (omega, gamma)");
    tq->add_option("--omega", omega, "precession frequency")->required();
    tq->add_option("--gamma", gamma, "damping rate")->required();
    tq->add_option("--tol", tol, "absolute tolerance");
    tq->add_option("--format", format_flag)->check(CLI::IsMember({"json", "csv"}));

    auto* cyc = app.add_subcommand("cycle", "optimal cycle and its thermodynamics");
    cyc->add_option("--config", config_path)->required();
    cyc->add_option("--format", format_flag)->check(CLI::IsMember({"json", "csv"}));

    auto* sws = app.add_subcommand("sweep-sigma", "phase diagram over (T_h, sigma_bar)");
    sws->add_option("--config", config_path)->required();
    sws->add_option("--grid", grid, "NxM: T_h points x sigma_bar points");
    sws->add_option("--output", prefix, "writes PREFIX.csv and PREFIX.json");

    auto* swt = app.add_subcommand("sweep-tc", "phase diagram over (T_h, T_c)");
    swt->add_option("--config", config_path)->required();
    swt->add_option("--grid", grid, "NxM: T_h points x T_c points");
    swt->add_option("--output", prefix, "writes PREFIX.csv and PREFIX.json");

    auto* orc = app.add_subcommand("oracle-check", "analytic vs numeric correlators on both isochores");
    orc->add_option("--config", config_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << report::error_json("UsageError", e.what()).dump() << '\n';
        return exit_usage;
    }

    try {
        if (k3->parsed()) {
            if (t_max == 0.0) t_max = 3.0 * 2.0 * std::numbers::pi / omega;
            const lgi::LGResult r = lgi::leggett_garg(omega, gamma, t_max, n, {tol, lgi::default_points_per_period});
            report::write_k3_csv(out, r);
            return exit_ok;
        }
        if (tq->parsed()) {
            const auto q = lgi::quantum_time(omega, gamma, {tol, lgi::default_points_per_period});
            emit_record(out, report::quantum_time_json(omega, gamma, q), resolve_format(format_flag, config::OutputFormat::Json));
            return exit_ok;
        }

        const config::RunConfig cfg = config::load_config(config_path);
        if (cyc->parsed()) {
            const EngineParams p = cfg.engine_with_T_h();
            p.validate();
            const auto s = cycle::solve_cycle(p, {cfg.equal_gamma});
            emit_record(out, report::cycle_json(p, s), resolve_format(format_flag, cfg.format));
            return s.feasible ? exit_ok : exit_infeasible;
        }
        if (sws->parsed())
            return run_sweep(cfg, sweep::AxisParam::SigmaBar, grid, prefix.empty() ? cfg.output_prefix : prefix, out);
        if (swt->parsed())
            return run_sweep(cfg, sweep::AxisParam::T_c, grid, prefix.empty() ? cfg.output_prefix : prefix, out);
        if (orc->parsed()) {
            const EngineParams p = cfg.engine_with_T_h();
            p.validate();
            const BranchCheck hot = check_branch(p.omega2, p.T_h, p.gamma0);
            const BranchCheck cold = check_branch(p.omega1, p.T_c, p.gamma0);
            const double worst = std::max(hot.max_rel_error, cold.max_rel_error);
            const bool pass = worst <= oracle_tolerance;
            ordered_json j;
            j["hot"] = {{"omega", p.omega2}, {"T", p.T_h}, {"max_rel_error", hot.max_rel_error},
                        {"steady_state_residual", hot.steady_state_residual}};
            j["cold"] = {{"omega", p.omega1}, {"T", p.T_c}, {"max_rel_error", cold.max_rel_error},
                         {"steady_state_residual", cold.steady_state_residual}};
            j["max_rel_error"] = worst;
            j["tolerance"] = oracle_tolerance;
            j["pass"] = pass;
            out << j.dump() << '\n';
            return pass ? exit_ok : exit_oracle;
        }
    } catch (const ConfigError& e) {
        err << report::error_json(to_string(e.kind()), e.what(), e.line(), e.key()).dump() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << report::error_json(to_string(e.kind()), e.what()).dump() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << report::error_json("Error", e.what()).dump() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace otto_lgi::cli
