#include "otto_lgi/phase_sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace otto_lgi::sweep {

std::string_view to_string(Phase p) noexcept {
    switch (p) {
    case Phase::Quantum: return "quantum";
    case Phase::Classical: return "classical";
    case Phase::Infeasible: return "infeasible";
    }
    return "unknown";
}

std::string_view to_string(AxisParam a) noexcept {
    switch (a) {
    case AxisParam::T_h: return "T_h";
    case AxisParam::T_c: return "T_c";
    case AxisParam::SigmaBar: return "sigma_bar";
    }
    return "unknown";
}

std::string_view to_string(Regime r) noexcept {
    switch (r) {
    case Regime::I: return "i";
    case Regime::II: return "ii";
    case Regime::III: return "iii";
    }
    return "unknown";
}

AxisParam parse_axis_param(std::string_view name) {
    if (name == "T_h") return AxisParam::T_h;
    if (name == "T_c") return AxisParam::T_c;
    if (name == "sigma_bar") return AxisParam::SigmaBar;
    fail(ErrorKind::AxisName, "unknown sweep axis '" + std::string(name) + "' (expected T_h, T_c or sigma_bar)");
}

CellClass classify_cell(const EngineParams& p, const ClassifyOptions& opts) {
    p.validate();
    CellClass cell;
    const double gamma_h = damping_rate(p.omega2, p.T_h, p.gamma0);
    cell.tau_q = lgi::quantum_time(p.omega2, gamma_h, opts.lgi);

    cell.status = cycle::check_feasibility(p).status;
    if (cell.status != cycle::Feasibility::Feasible) {
        cell.phase = Phase::Infeasible;
        return cell;
    }
    try {
        cell.tau_h = cycle::optimal_times(p, opts.cycle).tau_h;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InfeasibleCycle) throw;
        cell.phase = Phase::Infeasible;
        return cell;
    }
    cell.phase = cell.tau_q.exceeds(*cell.tau_h + tie_tolerance) ? Phase::Quantum : Phase::Classical;
    return cell;
}

double Axis::value(std::size_t i) const noexcept {
    if (count < 2) return min;
    // Pin both endpoints exactly.
    if (i + 1 == count) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::vector<double> Axis::values() const {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = value(i);
    return v;
}

void apply_axis(EngineParams& p, AxisParam a, double v) {
    switch (a) {
    case AxisParam::T_h: p.T_h = v; break;
    case AxisParam::T_c: p.T_c = v; break;
    case AxisParam::SigmaBar: p.sigma = v * p.tau2; break;
    }
}

LineRegime column_regime(const std::vector<CellClass>& line) {
    LineRegime r;
    std::optional<Phase> prev;
    bool any_quantum = false, any_classical = false;
    for (const CellClass& c : line) {
        if (c.phase == Phase::Infeasible) continue;
        any_quantum |= c.phase == Phase::Quantum;
        any_classical |= c.phase == Phase::Classical;
        if (prev && *prev != c.phase) ++r.transitions;
        prev = c.phase;
    }
    if (!any_quantum) {
        r.label = Regime::III;
    } else if (r.transitions >= 2) {
        r.label = Regime::II;
    } else {
        r.label = Regime::I;
        r.boundary_above_range = !any_classical;
    }
    return r;
}

std::vector<CellClass> PhaseDiagram::line(std::size_t iy) const {
    const auto first = cells.begin() + static_cast<std::ptrdiff_t>(iy * x.count);
    return {first, first + static_cast<std::ptrdiff_t>(x.count)};
}

namespace {

void check_axis(const Axis& a) {
    require_domain(a.count >= 2, "axis needs at least two points");
    require_domain(std::isfinite(a.min) && std::isfinite(a.max) && a.min <= a.max, "axis range must be finite with min <= max");
    if (a.param == AxisParam::SigmaBar)
        require_domain(a.min >= 0.0, "sigma_bar range must be non-negative");
    else
        require_domain(a.min > 0.0, "temperature range must be positive");
}

} // namespace

PhaseDiagram sweep(const EngineParams& base, const Axis& x_axis, const Axis& y_axis, const SweepOptions& opts) {
    base.validate();
    check_axis(x_axis);
    check_axis(y_axis);
    if (x_axis.param == y_axis.param)
        fail(ErrorKind::AxisName, "both sweep axes name " + std::string(to_string(x_axis.param)));

    PhaseDiagram d;
    d.base = base;
    d.x = x_axis;
    d.y = y_axis;
    const std::size_t total = x_axis.count * y_axis.count;
    d.cells.resize(total);

    auto work = [&](std::size_t k) {
        const std::size_t ix = k % x_axis.count;
        const std::size_t iy = k / x_axis.count;
        EngineParams p = base;
        apply_axis(p, x_axis.param, x_axis.value(ix));
        apply_axis(p, y_axis.param, y_axis.value(iy));
        CellClass cell;
        try {
            cell = classify_cell(p, opts.classify);
        } catch (const Error&) {
            cell.phase = Phase::Infeasible;
        }
        d.cells[k] = cell;
    };

    unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    if (threads <= 1) {
        for (std::size_t k = 0; k < total; ++k) work(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < total; k = next.fetch_add(1)) work(k);
            });
        }
    }

    d.regimes.reserve(y_axis.count);
    for (std::size_t iy = 0; iy < y_axis.count; ++iy) d.regimes.push_back(column_regime(d.line(iy)));
    return d;
}

CriticalValues critical_values(const std::vector<double>& axis_values, const std::vector<LineRegime>& regimes) {
    require_domain(axis_values.size() == regimes.size(), "axis and regime list differ in length");
    CriticalValues out;
    const std::size_t n = regimes.size();
    if (n == 0) return out;

    std::size_t first_not_i = 0;
    while (first_not_i < n && regimes[first_not_i].label == Regime::I) ++first_not_i;
    if (first_not_i > 0 && first_not_i < n)
        out.c1 = CriticalValue{axis_values[first_not_i - 1], axis_values[first_not_i - 1], axis_values[first_not_i]};

    std::size_t tail_iii = n;
    while (tail_iii > 0 && regimes[tail_iii - 1].label == Regime::III) --tail_iii;
    if (tail_iii > 0 && tail_iii < n)
        out.c2 = CriticalValue{axis_values[tail_iii], axis_values[tail_iii - 1], axis_values[tail_iii]};
    return out;
}

CriticalValues critical_values(const PhaseDiagram& d) { return critical_values(d.y.values(), d.regimes); }

} // namespace otto_lgi::sweep
