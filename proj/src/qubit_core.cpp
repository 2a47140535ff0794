#include "otto_lgi/qubit_core.hpp"

#include <cmath>
#include <string>

namespace otto_lgi {

namespace {

void check_bath_args(double omega, double T) {
    require_domain(std::isfinite(omega) && omega > 0.0, "omega must be positive and finite");
    require_domain(std::isfinite(T) && T >= min_temperature,
                   "temperature must be finite and >= 1e-12");
}

} // namespace

void EngineParams::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    require_domain(positive(omega1), "omega1 must be positive");
    require_domain(positive(omega2), "omega2 must be positive");
    require_domain(omega1 < omega2, "omega1 must be smaller than omega2");
    require_domain(positive(tau1), "tau1 must be positive");
    require_domain(positive(tau2), "tau2 must be positive");
    require_domain(std::isfinite(T_h) && T_h >= min_temperature, "T_h must be >= 1e-12");
    require_domain(std::isfinite(T_c) && T_c >= min_temperature, "T_c must be >= 1e-12");
    require_domain(positive(gamma0), "gamma0 must be positive");
    require_domain(std::isfinite(sigma) && sigma >= 0.0, "sigma must be non-negative");
}

BathCoupling BathCoupling::make(double omega, double T, double gamma0) {
    BathCoupling b;
    b.omega = omega;
    b.T = T;
    b.gamma0 = gamma0;
    b.n = thermal_occupation(omega, T);
    b.gamma = damping_rate(omega, T, gamma0);
    return b;
}

Polarization::Polarization(double value) : value_(value) {
    require_domain(std::isfinite(value) && value >= -0.5 && value <= 0.5,
                   "polarization must lie in [-1/2, 1/2]");
}

double MaybeUnbounded::value() const {
    if (unbounded_) fail(ErrorKind::Domain, "value is unbounded");
    return value_;
}

double thermal_occupation(double omega, double T) {
    check_bath_args(omega, T);
    // expm1 overflows to +inf for huge omega/T, giving exactly 0.
    return 1.0 / std::expm1(omega / T);
}

double damping_rate(double omega, double T, double gamma0) {
    check_bath_args(omega, T);
    require_domain(std::isfinite(gamma0) && gamma0 > 0.0, "gamma0 must be positive");
    return gamma0 * math::coth(omega / (2.0 * T));
}

Polarization equilibrium_polarization(double omega, double T) {
    check_bath_args(omega, T);
    return Polarization(-0.5 * std::tanh(omega / (2.0 * T)));
}

Polarization relax_polarization(Polarization p0, double omega, double T, double gamma0, double t) {
    require_domain(std::isfinite(t) && t >= 0.0, "relaxation time must be non-negative");
    const double gamma = damping_rate(omega, T, gamma0);
    const double p_eq = equilibrium_polarization(omega, T).value();
    return Polarization(p_eq + (p0.value() - p_eq) * std::exp(-gamma * t));
}

namespace math {

double coth(double x) {
    require_domain(std::isfinite(x) && x > 0.0, "coth argument must be positive");
    // For tiny x, 1/tanh(x) is accurate to rounding; no special case needed.
    return 1.0 / std::tanh(x);
}

MaybeUnbounded acoth(double x) {
    require_domain(!std::isnan(x) && x > 1.0, "acoth argument must exceed 1");
    if (std::isinf(x)) return MaybeUnbounded::finite(0.0);
    const double r = 0.5 * std::log1p(2.0 / (x - 1.0));
    if (!std::isfinite(r)) return MaybeUnbounded::unbounded();
    return MaybeUnbounded::finite(r);
}

} // namespace math

} // namespace otto_lgi
