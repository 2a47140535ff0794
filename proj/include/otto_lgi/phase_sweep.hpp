// phase_sweep.hpp: quantum/classical/infeasible phase diagrams of the engine
//
// A cell is Quantum when the Leggett-Garg inequality can still be violated
// over the whole heating stroke, i.e. the quantum time tau_q of the hot
// isochore strictly exceeds the heating time tau_h. Cells without finite
// optimal thermalization times are Infeasible.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otto_lgi/lgi.hpp"
#include "otto_lgi/otto_cycle.hpp"

namespace otto_lgi::sweep {

enum class Phase { Quantum, Classical, Infeasible };

std::string_view to_string(Phase p) noexcept;

struct CellClass {
    Phase phase{Phase::Infeasible};
    std::optional<double> tau_h;                          // absent when infeasible
    MaybeUnbounded tau_q = MaybeUnbounded::finite(0.0);  // heating-branch quantum time
    cycle::Feasibility status{cycle::Feasibility::Feasible};
};

struct ClassifyOptions {
    cycle::CycleOptions cycle{};
    lgi::QuantumTimeOptions lgi{};
};

// Ties within this absolute margin count as Classical.
inline constexpr double tie_tolerance = 1e-12;

CellClass classify_cell(const EngineParams& p, const ClassifyOptions& opts = {});

enum class AxisParam { T_h, T_c, SigmaBar };

std::string_view to_string(AxisParam a) noexcept;
// Accepts "T_h", "T_c", "sigma_bar"; throws AxisName otherwise.
AxisParam parse_axis_param(std::string_view name);

struct Axis {
    AxisParam param{AxisParam::T_h};
    double min{};
    double max{};
    std::size_t count{2};

    double value(std::size_t i) const noexcept;
    std::vector<double> values() const;
};

// Writes an axis value into the parameters; sigma_bar sets sigma = sigma_bar * tau2.
void apply_axis(EngineParams& p, AxisParam a, double v);

enum class Regime { I, II, III };

std::string_view to_string(Regime r) noexcept;

struct LineRegime {
    Regime label{Regime::III};
    std::size_t transitions{0};       // Quantum <-> Classical switches among feasible cells
    bool boundary_above_range{false}; // every feasible cell Quantum
};

// Cells ordered by increasing T_h. Infeasible cells are skipped.
LineRegime column_regime(const std::vector<CellClass>& line);

struct PhaseDiagram {
    EngineParams base{};
    Axis x{};  // scan axis (T_h for the figures); one line per y value
    Axis y{};
    std::vector<CellClass> cells;  // row-major: cells[iy * x.count + ix]
    std::vector<LineRegime> regimes;  // one per y value

    const CellClass& at(std::size_t ix, std::size_t iy) const { return cells[iy * x.count + ix]; }
    std::vector<CellClass> line(std::size_t iy) const;
};

struct SweepOptions {
    ClassifyOptions classify{};
    // 0 = std::thread::hardware_concurrency()
    unsigned threads{0};
};

// Cells are independent and are written to their own slot, so the result is
// identical for every thread count. Throws AxisName when both axes name the
// same parameter and Domain on empty/negative ranges.
PhaseDiagram sweep(const EngineParams& base, const Axis& x_axis, const Axis& y_axis,
                   const SweepOptions& opts = {});

struct CriticalValue {
    double value{};  // the axis value itself
    double lower{};  // bracketing interval from the neighbouring column
    double upper{};
};

struct CriticalValues {
    // Absent (NotBracketed) when the regime change does not occur inside the
    // y range.
    std::optional<CriticalValue> c1;  // last regime-i value before any ii/iii
    std::optional<CriticalValue> c2;  // first value from which every line is iii
};

CriticalValues critical_values(const std::vector<double>& axis_values,
                               const std::vector<LineRegime>& regimes);
CriticalValues critical_values(const PhaseDiagram& d);

} // namespace otto_lgi::sweep
