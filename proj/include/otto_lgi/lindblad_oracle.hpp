// lindblad_oracle.hpp: brute-force integration of the qubit master equation
//
// State-picture form of the Markovian master equation on an isochore,
//
//   drho/dt = -i[H, rho] + gamma0 n D[sigma_+] rho + gamma0 (n+1) D[sigma_-] rho,
//   D[L] rho = L rho L^dag - {L^dag L, rho}/2,   H = omega sigma_z / 2,
//
// integrated with fixed-step RK4 on explicit 2x2 matrices. Nothing here uses
// the closed-form Bloch solutions of qubit_core or lgi; it exists to check them.
//
// Basis ordering: index 0 is the excited state (sigma_z = +1), index 1 the
// ground state.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "otto_lgi/qubit_core.hpp"

namespace otto_lgi::oracle {

using OperatorMatrix = Eigen::Matrix2cd;

namespace ops {
OperatorMatrix identity();
OperatorMatrix sigma_x();
OperatorMatrix sigma_y();
OperatorMatrix sigma_z();
OperatorMatrix sigma_plus();   // |e><g|
OperatorMatrix sigma_minus();  // |g><e|
// sigma_x^2 = sigma_y^2 = sigma_z^2 = 1 and sigma_x sigma_y = i sigma_z.
bool pauli_algebra_holds();
} // namespace ops

// A 2x2 Hermitian matrix stored as four reals. Hermiticity holds by
// construction; trace and positivity are not assumed (the regression-theorem
// operator (sigma_x rho + rho sigma_x)/2 is traceless).
struct Hermitian2 {
    double p_excited{0.0};                // <e|A|e>
    double p_ground{0.0};                 // <g|A|g>
    std::complex<double> coherence{0.0};  // <e|A|g>

    OperatorMatrix matrix() const;
    // Takes the Hermitian part of m.
    static Hermitian2 from_matrix(const OperatorMatrix& m);

    double trace() const noexcept { return p_excited + p_ground; }
    // Ascending eigenvalues.
    std::pair<double, double> eigenvalues() const noexcept;
    double frobenius_distance(const Hermitian2& other) const noexcept;

    Hermitian2& operator+=(const Hermitian2& o) noexcept;
    friend Hermitian2 operator+(Hermitian2 a, const Hermitian2& b) noexcept { return a += b; }
    friend Hermitian2 operator*(double s, Hermitian2 a) noexcept;
};

// Unit trace and positive within 1e-10.
class DensityMatrix {
public:
    static constexpr double trace_tolerance = 1e-10;
    static constexpr double positivity_tolerance = 1e-10;

    // Throws Domain when h is not a valid state.
    explicit DensityMatrix(const Hermitian2& h);

    static DensityMatrix gibbs(double omega, double T);
    static DensityMatrix maximally_mixed();
    static DensityMatrix ground();
    // rho = (1 + r . sigma)/2, |r| <= 1.
    static DensityMatrix from_bloch(double x, double y, double z);

    const Hermitian2& elements() const noexcept { return h_; }
    double expectation_sigma_z() const noexcept { return h_.p_excited - h_.p_ground; }

private:
    Hermitian2 h_;
};

// Right-hand side of the master equation for one bath.
class Liouvillian {
public:
    Liouvillian(double omega, double T, double gamma0);

    Hermitian2 operator()(const Hermitian2& rho) const;
    const BathCoupling& bath() const noexcept { return bath_; }
    // Largest step accepted by evolve: min(1/omega, 1/gamma)/50.
    double max_step() const noexcept;

private:
    BathCoupling bath_;
    OperatorMatrix hamiltonian_;
    OperatorMatrix raise_;
    OperatorMatrix lower_;
    OperatorMatrix raise_dag_raise_;
    OperatorMatrix lower_dag_lower_;
};

Hermitian2 lindblad_rhs(const Hermitian2& rho, double omega, double T, double gamma0);

// One classical RK4 step.
Hermitian2 rk4_step(const Liouvillian& L, const Hermitian2& x, double dt);

// Propagates any Hermitian operator for time t with steps no longer than dt
// (the last step is shortened to land on t exactly).
Hermitian2 propagate(const Liouvillian& L, Hermitian2 x, double t, double dt);

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
};

// Samples at 0, dt, 2dt, ... and finally at t_final. Throws StepTooLarge
// when dt exceeds Liouvillian::max_step().
Trajectory evolve(const DensityMatrix& rho0, double omega, double T, double gamma0,
                  double t_final, double dt);

// Closed-form Gibbs state; the residual of lindblad_rhs on it is at rounding level.
DensityMatrix steady_state(double omega, double T, double gamma0);

// C(tau) = Re Tr[sigma_x Lambda_tau((sigma_x rho_ss + rho_ss sigma_x)/2)] on a
// non-decreasing grid of tau >= 0. The step is min(1/omega, 1/gamma)/steps_per_scale.
std::vector<double> correlation_numeric(double omega, double T, double gamma0,
                                        std::span<const double> tau_grid,
                                        double steps_per_scale = 200.0);

} // namespace otto_lgi::oracle
