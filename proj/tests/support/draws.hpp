// draws.hpp: seeded parameter generators shared by the property and acceptance tests
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "otto_lgi/otto_cycle.hpp"
#include "otto_lgi/qubit_core.hpp"

namespace otto_lgi::testing {

class Draws {
public:
    explicit Draws(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi);

    // Valid parameters with the engine condition satisfied and sigma inside
    // the friction bound. Not necessarily feasible (x_max may fall below R).
    EngineParams engine();
    // Valid parameters, engine condition not enforced.
    EngineParams any_params();
    // Rejection-samples engine() until check_feasibility passes.
    EngineParams feasible_engine();

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double Draws::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

inline EngineParams Draws::any_params() {
    EngineParams p;
    p.omega1 = log_uniform(0.5, 20.0);
    p.omega2 = p.omega1 * uniform(1.05, 4.0);
    p.tau1 = log_uniform(0.005, 1.0);
    p.tau2 = log_uniform(0.005, 1.0);
    p.T_c = log_uniform(0.1, 10.0);
    p.T_h = p.T_c * uniform(1.01, 20.0);
    p.gamma0 = log_uniform(0.05, 10.0);
    p.sigma = uniform(0.0, 0.3);
    return p;
}

inline EngineParams Draws::engine() {
    EngineParams p = any_params();
    // omega2/T_h < omega1/T_c with some margin
    p.T_h = p.T_c * p.omega2 / p.omega1 * uniform(1.05, 30.0);
    const double dp = cycle::delta_p_eq(p);
    p.sigma = std::sqrt(uniform(0.0, 0.95) * dp * p.tau2);
    return p;
}

inline EngineParams Draws::feasible_engine() {
    for (;;) {
        EngineParams p = engine();
        if (cycle::feasible(p)) return p;
    }
}

} // namespace otto_lgi::testing
