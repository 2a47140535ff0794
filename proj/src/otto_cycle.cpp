#include "otto_lgi/otto_cycle.hpp"

#include <cmath>

namespace otto_lgi::cycle {

namespace {

void check_relaxation_factors(double x, double y) {
    require_domain(x >= 0.0 && x <= 1.0, "x must lie in [0, 1]");
    require_domain(y >= 0.0 && y <= 1.0, "y must lie in [0, 1]");
    if (!(x * y < 1.0))
        fail(ErrorKind::NoFixedPoint, "x*y == 1: neither bath relaxes the qubit");
}

// sigma^2 omega1 (1/tau1 + 1/tau2) / (omega2 - omega1)
double friction_work_scale(const EngineParams& p) {
    return p.sigma * p.sigma * p.omega1 * (1.0 / p.tau1 + 1.0 / p.tau2) / (p.omega2 - p.omega1);
}

} // namespace

BranchRates branch_rates(const EngineParams& p, const CycleOptions& opts) {
    BranchRates r;
    r.hot = damping_rate(p.omega2, p.T_h, p.gamma0);
    r.cold = opts.equal_gamma ? r.hot : damping_rate(p.omega1, p.T_c, p.gamma0);
    return r;
}

double delta_p_eq(const EngineParams& p) {
    return equilibrium_polarization(p.omega2, p.T_h).value() -
           equilibrium_polarization(p.omega1, p.T_c).value();
}

double friction_increment(double sigma, double tau) {
    require_domain(std::isfinite(tau) && tau > 0.0, "stroke duration must be positive");
    return sigma * sigma / tau;
}

OptimalityConstants r_and_xmax(const EngineParams& p) {
    p.validate();
    const double dp = delta_p_eq(p);
    const double denom = dp + friction_increment(p.sigma, p.tau1);
    if (!(denom > 0.0))
        fail(ErrorKind::DegenerateDenominator, "Delta P^eq + sigma^2/tau1 <= 0");
    OptimalityConstants c;
    c.r = friction_work_scale(p) / denom;
    c.x_max = (dp - friction_increment(p.sigma, p.tau2)) / denom;
    return c;
}

std::string_view to_string(Feasibility f) noexcept {
    switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::NoEngine: return "no_engine";
    case Feasibility::FrictionBound: return "friction_bound";
    case Feasibility::NoPositiveWork: return "no_positive_work";
    }
    return "unknown";
}

FeasibilityReport check_feasibility(const EngineParams& p) {
    p.validate();
    FeasibilityReport rep;
    rep.delta_p_eq = delta_p_eq(p);
    rep.friction_bound = friction_increment(p.sigma, p.tau2);
    rep.on_boundary = std::abs(rep.friction_bound - rep.delta_p_eq) <=
                      1e-15 * std::max(std::abs(rep.delta_p_eq), 1e-300);
    if (!(rep.delta_p_eq > 0.0)) {
        rep.status = Feasibility::NoEngine;
    } else if (rep.on_boundary || rep.friction_bound > rep.delta_p_eq) {
        rep.status = Feasibility::FrictionBound;
    } else {
        // x_max > R  <=>  Delta P^eq > sigma^2/tau2 + sigma^2 omega1 (1/tau1 + 1/tau2)/(omega2 - omega1)
        if (!(rep.delta_p_eq - rep.friction_bound > friction_work_scale(p)))
            rep.status = Feasibility::NoPositiveWork;
    }
    return rep;
}

bool feasible(const EngineParams& p) { return check_feasibility(p).feasible(); }

OptimalTimes optimal_times(const EngineParams& p, const CycleOptions& opts) {
    const FeasibilityReport rep = check_feasibility(p);
    if (!rep.feasible())
        fail(ErrorKind::InfeasibleCycle,
             std::string("no finite thermalization times: ") + std::string(to_string(rep.status)));

    const OptimalityConstants k = r_and_xmax(p);
    const double root = std::sqrt(k.r * k.x_max * (1.0 + k.r - k.x_max));
    // 1 - y = (x_max R + root) / (x_max (1 + R)); log1p keeps tau_h accurate as sigma -> 0.
    const double one_minus_y = (k.x_max * k.r + root) / (k.x_max * (1.0 + k.r));
    if (!(one_minus_y < 1.0) || !std::isfinite(one_minus_y))
        fail(ErrorKind::InfeasibleCycle, "logarithm argument of the optimal times is not positive");

    const double log_y = std::log1p(-one_minus_y);
    const double a = delta_p_eq(p) + friction_increment(p.sigma, p.tau1);
    const double log_x_max = std::log1p(-(friction_increment(p.sigma, p.tau1) +
                                          friction_increment(p.sigma, p.tau2)) / a);
    const double log_x = log_x_max + log_y;

    const BranchRates rates = branch_rates(p, opts);
    OptimalTimes t;
    t.y = std::exp(log_y);
    t.x = std::exp(log_x);
    // -0.0 -> 0.0 in the frictionless limit
    t.tau_h = log_y == 0.0 ? 0.0 : -log_y / rates.hot;
    t.tau_c = log_x == 0.0 ? 0.0 : -log_x / rates.cold;
    return t;
}

Corners cycle_fixed_point(const EngineParams& p, double x, double y) {
    p.validate();
    check_relaxation_factors(x, y);
    const double ph = equilibrium_polarization(p.omega2, p.T_h).value();
    const double pc = equilibrium_polarization(p.omega1, p.T_c).value();
    const double s1 = friction_increment(p.sigma, p.tau1);
    const double s2 = friction_increment(p.sigma, p.tau2);

    Corners c;
    c.a = (pc * (1.0 - x) + x * ph * (1.0 - y) + x * s1 + s2) / (1.0 - x * y);
    c.b = ph + (c.a - ph) * y;
    c.c = c.b + s1;
    c.d = pc + (c.c - pc) * x;
    return c;
}

double heating_polarization_gain(const EngineParams& p, double x, double y) {
    p.validate();
    check_relaxation_factors(x, y);
    const double s2 = p.sigma * p.sigma;
    return (delta_p_eq(p) * (1.0 - x) * (1.0 - y) - s2 * (1.0 - y) * (x / p.tau1 + 1.0 / p.tau2)) /
           (1.0 - x * y);
}

BranchWork branch_work(double omega_i, double omega_f, double tau, double p0, double sigma) {
    const double inc = friction_increment(sigma, tau);
    BranchWork w;
    w.adiabatic = (omega_f - omega_i) * (0.5 * inc + p0);
    w.irreversible = 0.5 * (omega_f + omega_i) * inc;
    w.total = (omega_f - omega_i) * p0 + inc * omega_f;
    return w;
}

Heats heats(const EngineParams& p, const Corners& corners) {
    return {p.omega2 * (corners.b - corners.a), p.omega1 * (corners.d - corners.c)};
}

double total_work(const EngineParams& p, double x, double y) {
    const double gain = heating_polarization_gain(p, x, y);
    const double s2 = p.sigma * p.sigma;
    return -(p.omega2 - p.omega1) * gain + s2 * p.omega1 * (1.0 / p.tau2 + 1.0 / p.tau1);
}

double entropy_production(const EngineParams& p, double x, double y) {
    const double gain = heating_polarization_gain(p, x, y);
    const double s2 = p.sigma * p.sigma;
    return (p.omega1 / p.T_c - p.omega2 / p.T_h) * gain +
           (p.omega1 * s2 / p.T_c) * (1.0 / p.tau2 + 1.0 / p.tau1);
}

CycleSolution solve_cycle(const EngineParams& p, const CycleOptions& opts) {
    CycleSolution s;
    const FeasibilityReport rep = check_feasibility(p);
    s.status = rep.status;
    if (!rep.feasible()) {
        s.infeasible_reason = std::string(to_string(rep.status));
        return s;
    }
    const OptimalityConstants k = r_and_xmax(p);
    s.r = k.r;
    s.x_max = k.x_max;

    const OptimalTimes t = optimal_times(p, opts);
    s.feasible = true;
    s.x = t.x;
    s.y = t.y;
    s.tau_h = t.tau_h;
    s.tau_c = t.tau_c;

    if (!(s.x * s.y < 1.0)) {
        // Frictionless limit: zero-length isochores, nothing is exchanged.
        return s;
    }
    s.corners = cycle_fixed_point(p, s.x, s.y);
    const Heats q = heats(p, *s.corners);
    s.q_h = q.hot;
    s.q_c = q.cold;
    s.w_total = total_work(p, s.x, s.y);
    s.w_out = -s.w_total;
    s.delta_s = entropy_production(p, s.x, s.y);
    return s;
}

} // namespace otto_lgi::cycle
