// qubit_core.hpp: thermal quantities and isochoric relaxation of a single qubit
//
// Natural units throughout: hbar = k_B = 1, so frequencies, temperatures and
// energies share one unit and times are measured in its inverse. The qubit
// Hamiltonian is H = omega * sigma_z / 2 and the polarization is
// P = <sigma_z> / 2, so the mean energy is omega * P.

#pragma once

#include <limits>

#include "otto_lgi/error.hpp"

namespace otto_lgi {

// Smallest accepted temperature. Below this exp(omega/T) overflows for any
// realistic omega.
inline constexpr double min_temperature = 1e-12;

// The eight cycle parameters. Thermalization times are not inputs; they are
// derived by otto_cycle::optimal_times.
struct EngineParams {
    double omega1{10.0};  // frequency on the cold isochore
    double omega2{20.0};  // frequency on the hot isochore
    double tau1{0.01};    // expansion stroke duration (omega2 -> omega1)
    double tau2{0.1};     // compression stroke duration (omega1 -> omega2)
    double T_h{10.0};
    double T_c{1.0};
    double gamma0{1.0};   // bare system-bath coupling rate
    double sigma{0.0};    // internal friction; sigma^2/tau is a polarization

    // Throws Domain when a field is outside its range. The engine condition
    // omega1/T_c > omega2/T_h is *not* checked: violating points are valid
    // inputs that are classified as infeasible downstream.
    void validate() const;
};

// A bath at (omega, T) acting on the qubit.
struct BathCoupling {
    double omega{};
    double T{};
    double gamma0{};
    double n{};      // thermal occupation
    double gamma{};  // gamma0 * (2n + 1)

    static BathCoupling make(double omega, double T, double gamma0);
};

// P = <sigma_z>/2, always within [-1/2, 1/2].
class Polarization {
public:
    explicit Polarization(double value);
    double value() const noexcept { return value_; }
    friend bool operator==(Polarization, Polarization) = default;

private:
    double value_;
};

// A finite value or the tag "unbounded". Used where a quantity diverges
// (quantum time at zero damping, threshold temperature as gamma0 -> 0) so that
// no infinity leaks into arithmetic.
class MaybeUnbounded {
public:
    static MaybeUnbounded finite(double v) { return MaybeUnbounded(v, false); }
    static MaybeUnbounded unbounded() {
        return MaybeUnbounded(std::numeric_limits<double>::quiet_NaN(), true);
    }

    bool is_unbounded() const noexcept { return unbounded_; }
    // Throws Domain for the unbounded tag.
    double value() const;
    // Strictly greater than a finite number; unbounded exceeds everything.
    bool exceeds(double x) const noexcept { return unbounded_ || value_ > x; }

private:
    MaybeUnbounded(double v, bool u) : value_(v), unbounded_(u) {}
    double value_;
    bool unbounded_;
};

// n = 1/(exp(omega/T) - 1)
double thermal_occupation(double omega, double T);

// gamma = gamma0 * coth(omega/(2T)) = gamma0 * (2n + 1)
double damping_rate(double omega, double T, double gamma0);

// Stationary polarization of the bath: -tanh(omega/(2T))/2.
Polarization equilibrium_polarization(double omega, double T);

// Exponential approach to equilibrium along an isochore of duration t.
Polarization relax_polarization(Polarization p0, double omega, double T, double gamma0, double t);

namespace math {

// coth(x) for x > 0. Returns 1 once tanh saturates.
double coth(double x);

// Inverse hyperbolic cotangent for x > 1, as log1p(2/(x-1))/2. The result
// tends to 0 as x -> inf and diverges as x -> 1+; a non-finite result comes
// back as the unbounded tag.
MaybeUnbounded acoth(double x);

} // namespace math

} // namespace otto_lgi
