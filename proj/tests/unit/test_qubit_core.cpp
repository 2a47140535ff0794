#include <doctest.h>

#include <cmath>

#include "otto_lgi/lindblad_oracle.hpp"
#include "otto_lgi/qubit_core.hpp"
#include "../support/draws.hpp"

using namespace otto_lgi;
using doctest::Approx;

// Reference values evaluated with mpmath at 30 digits.
namespace ref {
constexpr double n_20_10 = 0.156517642749665651818;      // 1/(e^2 - 1)
constexpr double coth_1 = 1.31303528549933130364;
constexpr double minus_half_tanh_5 = -0.499954602131297565605;
}

TEST_CASE("thermal_occupation") {
    CHECK(thermal_occupation(1.0, 1e-12) == 0.0);
    CHECK(thermal_occupation(1.0, 1.0 / std::log(2.0)) == Approx(1.0).epsilon(1e-14));
    CHECK(thermal_occupation(20.0, 10.0) == Approx(ref::n_20_10).epsilon(1e-15));

    CHECK_THROWS_AS(thermal_occupation(0.0, 1.0), Error);
    CHECK_THROWS_AS(thermal_occupation(-1.0, 1.0), Error);
    CHECK_THROWS_AS(thermal_occupation(1.0, 0.0), Error);
    CHECK_THROWS_AS(thermal_occupation(1.0, 1e-13), Error);
    try {
        thermal_occupation(1.0, -2.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Domain);
    }
}

TEST_CASE("damping_rate") {
    CHECK(damping_rate(20.0, 1e-12, 1.0) == 1.0);
    CHECK(damping_rate(20.0, 10.0, 1.0) == Approx(ref::coth_1).epsilon(1e-15));
    CHECK(damping_rate(20.0, 10.0, 2.5) == Approx(2.5 * ref::coth_1).epsilon(1e-15));
    CHECK_THROWS_AS(damping_rate(20.0, 10.0, 0.0), Error);
    CHECK_THROWS_AS(damping_rate(20.0, 10.0, -1.0), Error);

    SUBCASE("identity with the occupation number") {
        testing::Draws g(11);
        for (int i = 0; i < 1000; ++i) {
            const double w = g.log_uniform(0.01, 100.0);
            const double T = g.log_uniform(0.01, 100.0);
            const double g0 = g.log_uniform(0.01, 10.0);
            const double expect = g0 * (2.0 * thermal_occupation(w, T) + 1.0);
            CHECK(std::abs(damping_rate(w, T, g0) - expect) <= 1e-14 * expect);
            CHECK(damping_rate(w, T, g0) >= g0);
        }
    }

    SUBCASE("high-temperature asymptote") {
        const double w = 20.0, g0 = 1.5, T = 1e3 * w;
        CHECK(damping_rate(w, T, g0) == Approx(2.0 * g0 * T / w).epsilon(0.01));
    }

    SUBCASE("BathCoupling") {
        const auto b = BathCoupling::make(20.0, 10.0, 1.0);
        CHECK(b.n == Approx(ref::n_20_10).epsilon(1e-15));
        CHECK(b.gamma == Approx(1.0 * (2 * b.n + 1)).epsilon(1e-15));
        CHECK(b.gamma >= b.gamma0);
    }
}

TEST_CASE("equilibrium_polarization") {
    CHECK(equilibrium_polarization(10.0, 1e-12).value() == -0.5);
    CHECK(equilibrium_polarization(10.0, 1e12).value() == Approx(0.0).epsilon(1e-10));
    CHECK(std::abs(equilibrium_polarization(10.0, 1e12).value()) < 1e-10);
    CHECK(equilibrium_polarization(10.0, 1.0).value() == Approx(ref::minus_half_tanh_5).epsilon(1e-15));
    CHECK_THROWS_AS(equilibrium_polarization(0.0, 1.0), Error);

    SUBCASE("matches the Gibbs state of the oracle") {
        testing::Draws g(12);
        for (int i = 0; i < 200; ++i) {
            const double w = g.log_uniform(0.1, 50.0);
            const double T = g.log_uniform(0.05, 100.0);
            const auto rho = oracle::steady_state(w, T, 1.0);
            CHECK(std::abs(rho.expectation_sigma_z() / 2.0 - equilibrium_polarization(w, T).value()) < 1e-10);
        }
    }
}

TEST_CASE("Polarization range") {
    CHECK_NOTHROW(Polarization(0.5));
    CHECK_NOTHROW(Polarization(-0.5));
    CHECK_THROWS_AS(Polarization(0.5000001), Error);
    CHECK_THROWS_AS(Polarization(std::nan("")), Error);
}

TEST_CASE("relax_polarization") {
    const Polarization eq = equilibrium_polarization(20.0, 2.0);
    CHECK(relax_polarization(eq, 20.0, 2.0, 1.0, 3.7).value() == Approx(eq.value()).epsilon(1e-15));
    CHECK(relax_polarization(Polarization(0.3), 20.0, 2.0, 1.0, 0.0).value() == 0.3);
    CHECK_THROWS_AS(relax_polarization(Polarization(0.3), 20.0, 2.0, 1.0, -1.0), Error);

    SUBCASE("agrees with the master equation") {
        const double w = 20.0, T = 2.0, g0 = 1.0, t = 0.5;
        const auto rho0 = oracle::DensityMatrix::from_bloch(0.0, 0.0, 0.6);
        const auto tr = oracle::evolve(rho0, w, T, g0, t, 2e-4);
        const double numeric = tr.states.back().expectation_sigma_z() / 2.0;
        const double analytic = relax_polarization(Polarization(0.3), w, T, g0, t).value();
        CHECK(std::abs(numeric - analytic) <= 1e-6 * std::abs(analytic));
    }

    SUBCASE("semigroup property") {
        testing::Draws g(13);
        for (int i = 0; i < 1000; ++i) {
            const double w = g.log_uniform(0.1, 50.0), T = g.log_uniform(0.05, 50.0);
            const double g0 = g.log_uniform(0.01, 5.0);
            const double t1 = g.uniform(0.0, 3.0), t2 = g.uniform(0.0, 3.0);
            const Polarization p0(g.uniform(-0.5, 0.5));
            const double twice = relax_polarization(relax_polarization(p0, w, T, g0, t1), w, T, g0, t2).value();
            const double once = relax_polarization(p0, w, T, g0, t1 + t2).value();
            CHECK(std::abs(twice - once) <= 1e-12);
        }
    }

    SUBCASE("monotone approach") {
        const Polarization p0(0.4);
        double prev = p0.value();
        for (int k = 1; k <= 50; ++k) {
            const double p = relax_polarization(p0, 10.0, 1.0, 0.7, 0.05 * k).value();
            CHECK(p <= prev);
            CHECK(p >= eq.value() - 1.0);
            prev = p;
        }
    }
}

TEST_CASE("math helpers") {
    CHECK(math::coth(1.0) == Approx(ref::coth_1).epsilon(1e-15));
    CHECK(math::coth(800.0) == 1.0);
    CHECK(math::coth(1e-8) == Approx(1e8).epsilon(1e-12));
    CHECK_THROWS_AS(math::coth(0.0), Error);

    CHECK(math::acoth(4.0 / 3.0).value() == Approx(std::log(7.0) / 2.0).epsilon(1e-15));
    CHECK(math::acoth(1e300).value() == Approx(1e-300).epsilon(1e-12));
    CHECK_THROWS_AS(math::acoth(1.0), Error);
    CHECK_THROWS_AS(math::acoth(0.5), Error);
    for (double x : {1.0001, 1.5, 2.0, 10.0, 1e4})
        CHECK(math::coth(math::acoth(x).value()) == Approx(x).epsilon(1e-12));

    CHECK(MaybeUnbounded::unbounded().exceeds(1e308));
    CHECK_FALSE(MaybeUnbounded::finite(1.0).exceeds(1.0));
    CHECK_THROWS_AS(MaybeUnbounded::unbounded().value(), Error);
}

TEST_CASE("EngineParams validation") {
    EngineParams p;
    CHECK_NOTHROW(p.validate());
    auto bad = [](auto mutate) {
        EngineParams q;
        mutate(q);
        return q;
    };
    CHECK_THROWS_AS(bad([](EngineParams& q) { q.omega1 = 0; }).validate(), Error);
    CHECK_THROWS_AS(bad([](EngineParams& q) { q.omega1 = 30; }).validate(), Error);
    CHECK_THROWS_AS(bad([](EngineParams& q) { q.tau1 = 0; }).validate(), Error);
    CHECK_THROWS_AS(bad([](EngineParams& q) { q.tau2 = -1; }).validate(), Error);
    CHECK_THROWS_AS(bad([](EngineParams& q) { q.T_c = 0; }).validate(), Error);
    CHECK_THROWS_AS(bad([](EngineParams& q) { q.gamma0 = 0; }).validate(), Error);
    CHECK_THROWS_AS(bad([](EngineParams& q) { q.sigma = -0.1; }).validate(), Error);
    // engine condition violations stay representable
    CHECK_NOTHROW(bad([](EngineParams& q) { q.T_h = 1.5; }).validate());
}
