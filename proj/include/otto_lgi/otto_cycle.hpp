// otto_cycle.hpp: finite-time Otto cycle of a qubit with internal friction
//
// Strokes and corners (the cycle starts at A):
//   A -> B  heating at omega2, bath T_h, for tau_h:   P_B = P_h + (P_A - P_h) y
//   B -> C  expansion omega2 -> omega1 in tau1:       P_C = P_B + sigma^2/tau1
//   C -> D  cooling at omega1, bath T_c, for tau_c:   P_D = P_c + (P_C - P_c) x
//   D -> A  compression omega1 -> omega2 in tau2:     P_A = P_D + sigma^2/tau2
// with y = exp(-gamma_h tau_h) and x = exp(-gamma_c tau_c).
//
// Work is counted as done ON the qubit, so an engine has W_total <= 0 and
// delivers W_out = -W_total.

#pragma once

#include <optional>
#include <string>

#include "otto_lgi/qubit_core.hpp"

namespace otto_lgi::cycle {

struct CycleOptions {
    // Force gamma_c = gamma_h (the hot-branch rate) on both isochores.
    bool equal_gamma{false};
};

struct BranchRates {
    double hot{};   // damping_rate(omega2, T_h, gamma0)
    double cold{};  // damping_rate(omega1, T_c, gamma0), or `hot` with equal_gamma
};

BranchRates branch_rates(const EngineParams& p, const CycleOptions& opts = {});

// P_h^eq - P_c^eq = -tanh(omega2/(2 T_h))/2 + tanh(omega1/(2 T_c))/2
double delta_p_eq(const EngineParams& p);

// Polarization gained over a unitary stroke of duration tau: sigma^2/tau.
double friction_increment(double sigma, double tau);

struct OptimalityConstants {
    double r{};      // R
    double x_max{};
};

// Throws DegenerateDenominator when Delta P^eq + sigma^2/tau1 <= 0.
OptimalityConstants r_and_xmax(const EngineParams& p);

enum class Feasibility {
    Feasible,
    NoEngine,          // Delta P^eq <= 0
    FrictionBound,     // sigma^2/tau2 >= Delta P^eq (equality included)
    NoPositiveWork,    // x_max <= R: no (x, y) gives W_out > 0
};

std::string_view to_string(Feasibility f) noexcept;

struct FeasibilityReport {
    Feasibility status{Feasibility::Feasible};
    double delta_p_eq{};
    double friction_bound{};  // sigma^2/tau2, for diagnostics
    bool on_boundary{false};  // sigma^2/tau2 == Delta P^eq within 1e-15 relative

    bool feasible() const noexcept { return status == Feasibility::Feasible; }
};

FeasibilityReport check_feasibility(const EngineParams& p);
bool feasible(const EngineParams& p);

struct OptimalTimes {
    double tau_h{};
    double tau_c{};
    double x{};  // exp(-gamma_c tau_c)
    double y{};  // exp(-gamma_h tau_h)
};

// Minimum thermalization times giving vanishing work output. Throws
// InfeasibleCycle outside the feasible region (the times diverge or become
// complex).
OptimalTimes optimal_times(const EngineParams& p, const CycleOptions& opts = {});

struct Corners {
    double a{}, b{}, c{}, d{};
};

// Unique steady state of the four-stroke map for 0 <= x, y <= 1. Throws
// NoFixedPoint when x*y == 1.
Corners cycle_fixed_point(const EngineParams& p, double x, double y);

// P_B - P_A in closed form.
double heating_polarization_gain(const EngineParams& p, double x, double y);

struct BranchWork {
    double adiabatic{};
    double irreversible{};
    double total{};
};

// Work on a unitary stroke omega_i -> omega_f of duration tau starting at P0.
BranchWork branch_work(double omega_i, double omega_f, double tau, double p0, double sigma);

struct Heats {
    double hot{};   // omega2 (P_B - P_A)
    double cold{};  // omega1 (P_D - P_C)
};

Heats heats(const EngineParams& p, const Corners& corners);

// Steady-state work per cycle, done on the qubit.
double total_work(const EngineParams& p, double x, double y);

// Entropy produced in the two baths per cycle.
double entropy_production(const EngineParams& p, double x, double y);

struct CycleSolution {
    bool feasible{false};
    Feasibility status{Feasibility::Feasible};
    std::string infeasible_reason;

    double x{}, y{};
    double tau_h{}, tau_c{};
    double r{}, x_max{};
    // Absent when x = y = 1 (frictionless limit): every polarization is then
    // a fixed point and only the energy bookkeeping (all zero) is defined.
    std::optional<Corners> corners;
    double w_total{}, w_out{};
    double q_h{}, q_c{};
    double delta_s{};
};

// Optimal times plus all bookkeeping at that point. Never throws for
// infeasible parameters; reports them through `feasible` instead.
CycleSolution solve_cycle(const EngineParams& p, const CycleOptions& opts = {});

} // namespace otto_lgi::cycle
