#include "otto_lgi/lindblad_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace otto_lgi::oracle {

using namespace std::complex_literals;

namespace ops {

OperatorMatrix identity() { return OperatorMatrix::Identity(); }

OperatorMatrix sigma_x() {
    OperatorMatrix m;
    m << 0.0, 1.0,
         1.0, 0.0;
    return m;
}

OperatorMatrix sigma_y() {
    OperatorMatrix m;
    m << 0.0, -1.0i,
         1.0i, 0.0;
    return m;
}

OperatorMatrix sigma_z() {
    OperatorMatrix m;
    m << 1.0, 0.0,
         0.0, -1.0;
    return m;
}

OperatorMatrix sigma_plus() {
    OperatorMatrix m;
    m << 0.0, 1.0,
         0.0, 0.0;
    return m;
}

OperatorMatrix sigma_minus() { return sigma_plus().adjoint(); }

bool pauli_algebra_holds() {
    const auto I = identity();
    const auto x = sigma_x(), y = sigma_y(), z = sigma_z();
    constexpr double tol = 1e-15;
    return (x * x - I).norm() < tol && (y * y - I).norm() < tol && (z * z - I).norm() < tol &&
           (x * y - 1.0i * z).norm() < tol &&
           ((x + 1.0i * y) / 2.0 - sigma_plus()).norm() < tol;
}

} // namespace ops

namespace {

void check_algebra_once() {
    static const bool ok = ops::pauli_algebra_holds();
    if (!ok) fail(ErrorKind::Domain, "Pauli algebra check failed");
}

} // namespace

OperatorMatrix Hermitian2::matrix() const {
    OperatorMatrix m;
    m << p_excited, coherence,
         std::conj(coherence), p_ground;
    return m;
}

Hermitian2 Hermitian2::from_matrix(const OperatorMatrix& m) {
    Hermitian2 h;
    h.p_excited = m(0, 0).real();
    h.p_ground = m(1, 1).real();
    h.coherence = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    return h;
}

std::pair<double, double> Hermitian2::eigenvalues() const noexcept {
    const double mean = 0.5 * (p_excited + p_ground);
    const double half_gap = std::hypot(0.5 * (p_excited - p_ground), std::abs(coherence));
    return {mean - half_gap, mean + half_gap};
}

double Hermitian2::frobenius_distance(const Hermitian2& o) const noexcept {
    const double de = p_excited - o.p_excited;
    const double dg = p_ground - o.p_ground;
    const double dc = std::abs(coherence - o.coherence);
    return std::sqrt(de * de + dg * dg + 2.0 * dc * dc);
}

Hermitian2& Hermitian2::operator+=(const Hermitian2& o) noexcept {
    p_excited += o.p_excited;
    p_ground += o.p_ground;
    coherence += o.coherence;
    return *this;
}

Hermitian2 operator*(double s, Hermitian2 a) noexcept {
    a.p_excited *= s;
    a.p_ground *= s;
    a.coherence *= s;
    return a;
}

DensityMatrix::DensityMatrix(const Hermitian2& h) : h_(h) {
    if (std::abs(h.trace() - 1.0) > trace_tolerance)
        fail(ErrorKind::Domain, "density matrix trace deviates from 1 by " +
                                    std::to_string(h.trace() - 1.0));
    if (h.eigenvalues().first < -positivity_tolerance)
        fail(ErrorKind::Domain, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::gibbs(double omega, double T) {
    // <sigma_z> = 2 P_eq
    const double sz = 2.0 * equilibrium_polarization(omega, T).value();
    return DensityMatrix(Hermitian2{0.5 * (1.0 + sz), 0.5 * (1.0 - sz), 0.0});
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(Hermitian2{0.5, 0.5, 0.0}); }

DensityMatrix DensityMatrix::ground() { return DensityMatrix(Hermitian2{0.0, 1.0, 0.0}); }

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
    require_domain(x * x + y * y + z * z <= 1.0 + 1e-12, "Bloch vector longer than 1");
    // rho_eg = (x - i y)/2
    return DensityMatrix(Hermitian2{0.5 * (1.0 + z), 0.5 * (1.0 - z), {0.5 * x, -0.5 * y}});
}

Liouvillian::Liouvillian(double omega, double T, double gamma0)
    : bath_(BathCoupling::make(omega, T, gamma0)) {
    check_algebra_once();
    hamiltonian_ = 0.5 * omega * ops::sigma_z();
    raise_ = std::sqrt(gamma0 * bath_.n) * ops::sigma_plus();
    lower_ = std::sqrt(gamma0 * (bath_.n + 1.0)) * ops::sigma_minus();
    raise_dag_raise_ = raise_.adjoint() * raise_;
    lower_dag_lower_ = lower_.adjoint() * lower_;
}

Hermitian2 Liouvillian::operator()(const Hermitian2& rho) const {
    const OperatorMatrix r = rho.matrix();
    OperatorMatrix d = -1.0i * (hamiltonian_ * r - r * hamiltonian_);
    d += raise_ * r * raise_.adjoint() - 0.5 * (raise_dag_raise_ * r + r * raise_dag_raise_);
    d += lower_ * r * lower_.adjoint() - 0.5 * (lower_dag_lower_ * r + r * lower_dag_lower_);
    return Hermitian2::from_matrix(d);
}

double Liouvillian::max_step() const noexcept {
    return std::min(1.0 / bath_.omega, 1.0 / bath_.gamma) / 50.0;
}

Hermitian2 lindblad_rhs(const Hermitian2& rho, double omega, double T, double gamma0) {
    return Liouvillian(omega, T, gamma0)(rho);
}

Hermitian2 rk4_step(const Liouvillian& L, const Hermitian2& x, double dt) {
    const Hermitian2 k1 = L(x);
    const Hermitian2 k2 = L(x + (0.5 * dt) * k1);
    const Hermitian2 k3 = L(x + (0.5 * dt) * k2);
    const Hermitian2 k4 = L(x + dt * k3);
    return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Hermitian2 propagate(const Liouvillian& L, Hermitian2 x, double t, double dt) {
    require_domain(t >= 0.0, "propagation time must be non-negative");
    require_domain(dt > 0.0, "step must be positive");
    if (t == 0.0) return x;
    const auto steps = static_cast<long>(std::ceil(t / dt - 1e-9));
    const double h = t / static_cast<double>(steps);
    for (long i = 0; i < steps; ++i) x = rk4_step(L, x, h);
    return x;
}

Trajectory evolve(const DensityMatrix& rho0, double omega, double T, double gamma0,
                  double t_final, double dt) {
    const Liouvillian L(omega, T, gamma0);
    require_domain(std::isfinite(t_final) && t_final >= 0.0, "t_final must be non-negative");
    require_domain(dt > 0.0, "dt must be positive");
    if (dt > L.max_step() * (1.0 + 1e-12))
        fail(ErrorKind::StepTooLarge, "dt = " + std::to_string(dt) + " exceeds min(1/omega, 1/gamma)/50 = " +
                                          std::to_string(L.max_step()));

    Trajectory traj;
    const auto full_steps = static_cast<long>(std::floor(t_final / dt + 1e-9));
    traj.times.reserve(static_cast<std::size_t>(full_steps) + 2);
    traj.states.reserve(static_cast<std::size_t>(full_steps) + 2);

    Hermitian2 x = rho0.elements();
    traj.times.push_back(0.0);
    traj.states.push_back(rho0);
    for (long i = 1; i <= full_steps; ++i) {
        x = rk4_step(L, x, dt);
        traj.times.push_back(static_cast<double>(i) * dt);
        traj.states.emplace_back(x);
    }
    const double rest = t_final - static_cast<double>(full_steps) * dt;
    if (rest > 1e-12 * dt) {
        x = rk4_step(L, x, rest);
        traj.times.push_back(t_final);
        traj.states.emplace_back(x);
    }
    return traj;
}

DensityMatrix steady_state(double omega, double T, double gamma0) {
    require_domain(gamma0 > 0.0, "gamma0 must be positive");
    return DensityMatrix::gibbs(omega, T);
}

std::vector<double> correlation_numeric(double omega, double T, double gamma0,
                                        std::span<const double> tau_grid,
                                        double steps_per_scale) {
    require_domain(steps_per_scale >= 50.0, "steps_per_scale must be >= 50");
    const Liouvillian L(omega, T, gamma0);
    const double dt = L.max_step() * 50.0 / steps_per_scale;

    const OperatorMatrix sx = ops::sigma_x();
    const OperatorMatrix rho_ss = steady_state(omega, T, gamma0).elements().matrix();
    Hermitian2 x = Hermitian2::from_matrix(0.5 * (sx * rho_ss + rho_ss * sx));

    std::vector<double> out;
    out.reserve(tau_grid.size());
    double tau = 0.0;
    for (double next : tau_grid) {
        require_domain(next >= tau, "tau grid must be non-negative and non-decreasing");
        x = propagate(L, x, next - tau, dt);
        tau = next;
        out.push_back((sx * x.matrix()).trace().real());
    }
    return out;
}

} // namespace otto_lgi::oracle
