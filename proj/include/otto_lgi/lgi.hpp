// lgi.hpp: Leggett-Garg function of the damped qubit and the quantum time
//
// For sigma_x measured on a qubit precessing at omega and dephasing at rate
// gamma/2, the symmetrized two-time correlator is
//   C(tau) = exp(-gamma tau / 2) cos(omega tau),
// and three equally spaced measurements separated by t give
//   K3(t) = C(t) + C(t) - C(2t).
// Macrorealism requires K3 <= 1.

#pragma once

#include <cstddef>
#include <vector>

#include "otto_lgi/qubit_core.hpp"

namespace otto_lgi::lgi {

inline constexpr double default_tolerance = 1e-10;
inline constexpr std::size_t default_points_per_period = 1000;

// Luders bound for three dichotomic measurements.
inline constexpr double quantum_bound = 1.5;

double correlation_xx(double tau, double omega, double gamma);

double k3(double t, double omega, double gamma);

// For gamma > 0, K3(t) <= 2 e^{-gamma t/2} + e^{-gamma t} <= 1 from this
// spacing on: (2/gamma) ln(1 + sqrt 2).
double violation_window(double gamma);

struct QuantumTimeOptions {
    double tol{default_tolerance};
    std::size_t points_per_period{default_points_per_period};
};

// tau_q = max{2t : K3(t) > 1}; 0 when K3 never exceeds 1, unbounded when
// gamma == 0.
MaybeUnbounded quantum_time(double omega, double gamma, QuantumTimeOptions opts = {});

// T_q = omega2 / (2 acoth(2 omega2 / gamma0)): the hot-bath temperature at
// which damping_rate(omega2, T_q, gamma0) = 2 omega2. Throws NoQuantumPhase
// when gamma0 >= 2 omega2. Unbounded when acoth underflows to 0.
MaybeUnbounded threshold_temperature(double omega2, double gamma0);

struct LGResult {
    double omega{};
    double gamma{};
    std::vector<double> t_samples;
    std::vector<double> k3_values;
    MaybeUnbounded tau_q = MaybeUnbounded::finite(0.0);
    bool violated{false};
};

// K3 sampled on n points of [0, t_max] together with tau_q.
LGResult leggett_garg(double omega, double gamma, double t_max, std::size_t n,
                      QuantumTimeOptions opts = {});

} // namespace otto_lgi::lgi
