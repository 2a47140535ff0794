// report.hpp: CSV and JSON output for the command-line tools
//
// Numbers are written with 17 significant digits through std::to_chars, so
// output does not depend on the C locale and parses back to the same double.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "otto_lgi/lgi.hpp"
#include "otto_lgi/otto_cycle.hpp"
#include "otto_lgi/phase_sweep.hpp"

namespace otto_lgi::report {

std::string format_double(double v);
// Inverse of format_double; also accepts "nan", "inf", "-inf". Throws BadValue.
double parse_double(std::string_view s);

// Columns: t,K3
void write_k3_csv(std::ostream& os, const lgi::LGResult& r);

// Columns: <x axis>,<y axis>,tau_h,tau_q,class. tau_h is "nan" for infeasible
// cells; tau_q is "unbounded" at zero damping.
void write_phase_csv(std::ostream& os, const sweep::PhaseDiagram& d);

struct PhaseCsvRow {
    double x{};
    double y{};
    double tau_h{};  // NaN when infeasible
    MaybeUnbounded tau_q = MaybeUnbounded::finite(0.0);
    sweep::Phase phase{sweep::Phase::Infeasible};
};

struct PhaseCsv {
    std::string x_name;
    std::string y_name;
    std::vector<PhaseCsvRow> rows;
};

// Throws BadValue on malformed input.
PhaseCsv read_phase_csv(std::istream& is);

nlohmann::ordered_json params_json(const EngineParams& p);
nlohmann::ordered_json cycle_json(const EngineParams& p, const cycle::CycleSolution& s);
nlohmann::ordered_json quantum_time_json(double omega, double gamma, const MaybeUnbounded& tau_q);
// Regime labels per y value, critical values and cell counts.
nlohmann::ordered_json phase_summary_json(const sweep::PhaseDiagram& d);

// {"error": kind, "message": ..., ["line": n, "key": k]}
nlohmann::ordered_json error_json(std::string_view kind, std::string_view message, int line = 0,
                                  std::string_view key = {});

// Flat key,value CSV for a single record (nested objects use dotted keys).
void write_record_csv(std::ostream& os, const nlohmann::ordered_json& record);

} // namespace otto_lgi::report
