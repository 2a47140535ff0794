// bindings.cpp: Python module otto_lgi._core

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>

#include "otto_lgi/lgi.hpp"
#include "otto_lgi/lindblad_oracle.hpp"
#include "otto_lgi/otto_cycle.hpp"
#include "otto_lgi/phase_sweep.hpp"
#include "otto_lgi/qubit_core.hpp"

namespace py = pybind11;
using namespace otto_lgi;

namespace {

// Unbounded maps to float('inf') on the Python side.
double to_python(const MaybeUnbounded& v) {
    return v.is_unbounded() ? std::numeric_limits<double>::infinity() : v.value();
}

EngineParams make_params(double omega1, double omega2, double tau1, double tau2, double T_h, double T_c,
                         double gamma0, double sigma) {
    EngineParams p{omega1, omega2, tau1, tau2, T_h, T_c, gamma0, sigma};
    p.validate();
    return p;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Leggett-Garg quantumness of a finite-time qubit Otto engine";

    static py::exception<Error> error(m, "OttoError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::class_<EngineParams>(m, "EngineParams")
        .def(py::init(&make_params), py::arg("omega1") = 10.0, py::arg("omega2") = 20.0, py::arg("tau1") = 0.01,
             py::arg("tau2") = 0.1, py::arg("T_h") = 10.0, py::arg("T_c") = 1.0, py::arg("gamma0") = 1.0,
             py::arg("sigma") = 0.0)
        .def_readwrite("omega1", &EngineParams::omega1)
        .def_readwrite("omega2", &EngineParams::omega2)
        .def_readwrite("tau1", &EngineParams::tau1)
        .def_readwrite("tau2", &EngineParams::tau2)
        .def_readwrite("T_h", &EngineParams::T_h)
        .def_readwrite("T_c", &EngineParams::T_c)
        .def_readwrite("gamma0", &EngineParams::gamma0)
        .def_readwrite("sigma", &EngineParams::sigma)
        .def("__repr__", [](const EngineParams& p) {
            return "EngineParams(omega1=" + std::to_string(p.omega1) + ", omega2=" + std::to_string(p.omega2) +
                   ", tau1=" + std::to_string(p.tau1) + ", tau2=" + std::to_string(p.tau2) +
                   ", T_h=" + std::to_string(p.T_h) + ", T_c=" + std::to_string(p.T_c) +
                   ", gamma0=" + std::to_string(p.gamma0) + ", sigma=" + std::to_string(p.sigma) + ")";
        });

    m.def("thermal_occupation", &thermal_occupation, py::arg("omega"), py::arg("T"));
    m.def("damping_rate", &damping_rate, py::arg("omega"), py::arg("T"), py::arg("gamma0"));
    m.def("equilibrium_polarization", [](double omega, double T) { return equilibrium_polarization(omega, T).value(); },
          py::arg("omega"), py::arg("T"));
    m.def("relax_polarization",
          [](double p0, double omega, double T, double gamma0, double t) {
              return relax_polarization(Polarization(p0), omega, T, gamma0, t).value();
          },
          py::arg("p0"), py::arg("omega"), py::arg("T"), py::arg("gamma0"), py::arg("t"));

    m.def("correlation_xx", &lgi::correlation_xx, py::arg("tau"), py::arg("omega"), py::arg("gamma"));
    m.def("k3", &lgi::k3, py::arg("t"), py::arg("omega"), py::arg("gamma"));
    m.def("quantum_time",
          [](double omega, double gamma, double tol) { return to_python(lgi::quantum_time(omega, gamma, {tol})); },
          py::arg("omega"), py::arg("gamma"), py::arg("tol") = lgi::default_tolerance,
          "Quantum time tau_q; inf when gamma == 0.");
    m.def("threshold_temperature",
          [](double omega2, double gamma0) { return to_python(lgi::threshold_temperature(omega2, gamma0)); },
          py::arg("omega2"), py::arg("gamma0"));

    m.def("correlation_numeric",
          [](double omega, double T, double gamma0, std::vector<double> taus) {
              return oracle::correlation_numeric(omega, T, gamma0, taus);
          },
          py::arg("omega"), py::arg("T"), py::arg("gamma0"), py::arg("taus"));

    m.def("delta_p_eq", &cycle::delta_p_eq, py::arg("params"));
    m.def("feasible", &cycle::feasible, py::arg("params"));
    m.def("optimal_times",
          [](const EngineParams& p, bool equal_gamma) {
              const auto t = cycle::optimal_times(p, {equal_gamma});
              return py::dict(py::arg("tau_h") = t.tau_h, py::arg("tau_c") = t.tau_c, py::arg("x") = t.x,
                              py::arg("y") = t.y);
          },
          py::arg("params"), py::arg("equal_gamma") = false);
    m.def("total_work", &cycle::total_work, py::arg("params"), py::arg("x"), py::arg("y"));
    m.def("entropy_production", &cycle::entropy_production, py::arg("params"), py::arg("x"), py::arg("y"));
    m.def("solve_cycle",
          [](const EngineParams& p, bool equal_gamma) {
              const auto s = cycle::solve_cycle(p, {equal_gamma});
              py::dict d;
              d["feasible"] = s.feasible;
              d["status"] = std::string(cycle::to_string(s.status));
              if (!s.feasible) return d;
              d["x"] = s.x;
              d["y"] = s.y;
              d["tau_h"] = s.tau_h;
              d["tau_c"] = s.tau_c;
              d["R"] = s.r;
              d["x_max"] = s.x_max;
              if (s.corners)
                  d["corners"] = py::make_tuple(s.corners->a, s.corners->b, s.corners->c, s.corners->d);
              else
                  d["corners"] = py::none();
              d["W_total"] = s.w_total;
              d["W_out"] = s.w_out;
              d["Q_h"] = s.q_h;
              d["Q_c"] = s.q_c;
              d["DeltaS"] = s.delta_s;
              return d;
          },
          py::arg("params"), py::arg("equal_gamma") = false);

    m.def("classify_cell",
          [](const EngineParams& p, bool equal_gamma) {
              sweep::ClassifyOptions o;
              o.cycle.equal_gamma = equal_gamma;
              const auto c = sweep::classify_cell(p, o);
              py::dict d;
              d["phase"] = std::string(sweep::to_string(c.phase));
              d["tau_h"] = c.tau_h ? py::cast(*c.tau_h) : py::none();
              d["tau_q"] = to_python(c.tau_q);
              return d;
          },
          py::arg("params"), py::arg("equal_gamma") = false);

    m.def("sweep",
          [](const EngineParams& base, const std::string& x_name, double x_min, double x_max, std::size_t nx,
             const std::string& y_name, double y_min, double y_max, std::size_t ny, bool equal_gamma,
             unsigned threads) {
              sweep::Axis x{sweep::parse_axis_param(x_name), x_min, x_max, nx};
              sweep::Axis y{sweep::parse_axis_param(y_name), y_min, y_max, ny};
              sweep::SweepOptions o;
              o.classify.cycle.equal_gamma = equal_gamma;
              o.threads = threads;
              sweep::PhaseDiagram d;
              {
                  py::gil_scoped_release release;
                  d = sweep::sweep(base, x, y, o);
              }
              py::list phases, regimes;
              for (std::size_t iy = 0; iy < ny; ++iy) {
                  py::list row;
                  for (std::size_t ix = 0; ix < nx; ++ix) row.append(std::string(sweep::to_string(d.at(ix, iy).phase)));
                  phases.append(row);
                  regimes.append(std::string(sweep::to_string(d.regimes[iy].label)));
              }
              const auto crit = sweep::critical_values(d);
              py::dict out;
              out["x"] = x.values();
              out["y"] = y.values();
              out["phases"] = phases;
              out["regimes"] = regimes;
              out["c1"] = crit.c1 ? py::cast(crit.c1->value) : py::none();
              out["c2"] = crit.c2 ? py::cast(crit.c2->value) : py::none();
              return out;
          },
          py::arg("base"), py::arg("x_name"), py::arg("x_min"), py::arg("x_max"), py::arg("nx"), py::arg("y_name"),
          py::arg("y_min"), py::arg("y_max"), py::arg("ny"), py::arg("equal_gamma") = false, py::arg("threads") = 0);
}
