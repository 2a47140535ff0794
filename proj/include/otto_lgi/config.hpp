// config.hpp: `key = value` run configuration
//
// One pair per line, `#` starts a comment, blank lines are ignored. Every key
// is optional; see RunConfig for defaults. Unknown keys are rejected.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "otto_lgi/qubit_core.hpp"

namespace otto_lgi::config {

struct GridSpec {
    double min{};
    double max{};
    std::size_t count{200};
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
    // Defaults describe the reference engine with gamma0 = 1.
    double omega1{10.0};
    double omega2{20.0};
    double tau1{0.01};
    double tau2{0.1};
    std::optional<double> T_h;  // required by `cycle` and `oracle-check`
    double T_c{1.0};
    double gamma0{1.0};
    double sigma{0.0};
    std::optional<double> sigma_bar;  // sigma / tau2; overrides sigma when present

    bool equal_gamma{false};
    double tol{1e-10};
    std::size_t points_per_period{1000};

    GridSpec T_h_grid{4.0, 60.0, 200};
    GridSpec sigma_bar_grid{0.0, 0.65, 200};
    GridSpec T_c_grid{0.5, 20.0, 200};

    std::string output_prefix;  // empty: the command picks one
    OutputFormat format{OutputFormat::Json};

    // Engine parameters; T_h falls back to `T_h_fallback` when unset.
    EngineParams engine(std::optional<double> T_h_fallback = std::nullopt) const;
    // Throws MissingRequired when T_h is unset.
    EngineParams engine_with_T_h() const;
};

// Throws ConfigError (UnknownKey, BadValue) with the 1-based line number.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

} // namespace otto_lgi::config
