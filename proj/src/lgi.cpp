#include "otto_lgi/lgi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace otto_lgi::lgi {

double correlation_xx(double tau, double omega, double gamma) {
    require_domain(std::isfinite(tau) && tau >= 0.0, "tau must be non-negative");
    require_domain(gamma >= 0.0, "gamma must be non-negative");
    return std::exp(-0.5 * gamma * tau) * std::cos(omega * tau);
}

double k3(double t, double omega, double gamma) {
    require_domain(std::isfinite(t) && t >= 0.0, "t must be non-negative");
    require_domain(gamma >= 0.0, "gamma must be non-negative");
    const double e = std::exp(-0.5 * gamma * t);
    return 2.0 * e * std::cos(omega * t) - e * e * std::cos(2.0 * omega * t);
}

double violation_window(double gamma) {
    require_domain(gamma > 0.0, "window needs gamma > 0");
    return (2.0 / gamma) * std::log1p(std::numbers::sqrt2);
}

namespace {

// Last t in (lo, hi] with K3(t) > 1, scanning n uniform points and bisecting
// the final down-crossing. Returns 0 when no sample exceeds 1.
double last_violation(double lo, double hi, std::size_t n, double omega, double gamma, double tol) {
    auto excess = [&](double t) { return k3(t, omega, gamma) - 1.0; };
    const double h = (hi - lo) / static_cast<double>(n);
    for (std::size_t i = n; i >= 1; --i) {
        const double t = lo + h * static_cast<double>(i);
        if (excess(t) > 0.0) {
            // t violates; t + h does not (or lies at/after the window edge).
            double a = t, b = std::min(t + h, hi);
            if (b <= a) return a;
            while (b - a > tol) {
                const double m = 0.5 * (a + b);
                if (excess(m) > 0.0) a = m;
                else b = m;
            }
            return a;
        }
    }
    return 0.0;
}

} // namespace

MaybeUnbounded quantum_time(double omega, double gamma, QuantumTimeOptions opts) {
    require_domain(omega > 0.0, "omega must be positive");
    require_domain(gamma >= 0.0, "gamma must be non-negative");
    require_domain(opts.tol > 0.0, "tolerance must be positive");
    require_domain(opts.points_per_period >= 2, "need at least two points per period");
    if (gamma == 0.0) return MaybeUnbounded::unbounded();

    const double window = violation_window(gamma);
    const double period = 2.0 * std::numbers::pi / omega;
    const auto n = std::max<std::size_t>(
        opts.points_per_period,
        static_cast<std::size_t>(std::ceil(window / period * static_cast<double>(opts.points_per_period))));

    // Bisection works on t; tau_q = 2t.
    const double t_tol = 0.5 * opts.tol;
    double t = last_violation(0.0, window, n, omega, gamma, t_tol);

    // Near t = 0, K3 = 1 + (omega t)^2 (1 - (gamma/2omega)^2) + O(t^3), so a
    // violation hugging the origin exists whenever gamma < 2 omega. It can be
    // narrower than one scan step; zoom into the first step until found.
    if (t == 0.0 && gamma < 2.0 * omega) {
        double hi = window / static_cast<double>(n);
        while (t == 0.0 && hi > t_tol) {
            t = last_violation(0.0, hi, opts.points_per_period, omega, gamma, t_tol);
            hi /= static_cast<double>(opts.points_per_period);
        }
    }
    return MaybeUnbounded::finite(2.0 * t);
}

MaybeUnbounded threshold_temperature(double omega2, double gamma0) {
    require_domain(omega2 > 0.0, "omega2 must be positive");
    require_domain(gamma0 > 0.0, "gamma0 must be positive");
    if (gamma0 >= 2.0 * omega2)
        fail(ErrorKind::NoQuantumPhase, "gamma0 >= 2 omega2: damping exceeds the coherent scale at any temperature");
    const MaybeUnbounded a = math::acoth(2.0 * omega2 / gamma0);
    if (a.is_unbounded()) return MaybeUnbounded::finite(0.0);
    if (a.value() == 0.0) return MaybeUnbounded::unbounded();
    const double tq = omega2 / (2.0 * a.value());
    if (!std::isfinite(tq)) return MaybeUnbounded::unbounded();
    return MaybeUnbounded::finite(tq);
}

LGResult leggett_garg(double omega, double gamma, double t_max, std::size_t n, QuantumTimeOptions opts) {
    require_domain(n >= 2, "need at least two samples");
    require_domain(t_max > 0.0, "t_max must be positive");
    LGResult r;
    r.omega = omega;
    r.gamma = gamma;
    r.t_samples.resize(n);
    r.k3_values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
        r.t_samples[i] = t;
        r.k3_values[i] = k3(t, omega, gamma);
    }
    r.tau_q = quantum_time(omega, gamma, opts);
    r.violated = r.tau_q.exceeds(0.0);
    return r;
}

} // namespace otto_lgi::lgi
