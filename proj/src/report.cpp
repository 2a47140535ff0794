#include "otto_lgi/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace otto_lgi::report {

using nlohmann::ordered_json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return {buf.data(), res.ptr};
}

double parse_double(std::string_view s) {
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    double out{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(ErrorKind::BadValue, "not a number: '" + std::string(s) + "'");
    return out;
}

void write_k3_csv(std::ostream& os, const lgi::LGResult& r) {
    os << "t,K3\n";
    for (std::size_t i = 0; i < r.t_samples.size(); ++i)
        os << format_double(r.t_samples[i]) << ',' << format_double(r.k3_values[i]) << '\n';
}

namespace {

std::string tau_q_text(const MaybeUnbounded& q) {
    return q.is_unbounded() ? "unbounded" : format_double(q.value());
}

ordered_json tau_q_value(const MaybeUnbounded& q) {
    return q.is_unbounded() ? ordered_json("unbounded") : ordered_json(q.value());
}

ordered_json axis_json(const sweep::Axis& a) {
    return {{"name", sweep::to_string(a.param)}, {"min", a.min}, {"max", a.max}, {"count", a.count}};
}

ordered_json critical_json(const std::optional<sweep::CriticalValue>& c) {
    if (!c) return nullptr;
    return {{"value", c->value}, {"lower", c->lower}, {"upper", c->upper}};
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(sep, pos);
        out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

void flatten(const ordered_json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_number_float()) {
        out.emplace_back(prefix, format_double(j.get<double>()));
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else if (j.is_null()) {
        out.emplace_back(prefix, "");
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

} // namespace

void write_phase_csv(std::ostream& os, const sweep::PhaseDiagram& d) {
    os << sweep::to_string(d.x.param) << ',' << sweep::to_string(d.y.param) << ",tau_h,tau_q,class\n";
    for (std::size_t iy = 0; iy < d.y.count; ++iy) {
        const std::string y = format_double(d.y.value(iy));
        for (std::size_t ix = 0; ix < d.x.count; ++ix) {
            const sweep::CellClass& c = d.at(ix, iy);
            os << format_double(d.x.value(ix)) << ',' << y << ','
               << (c.tau_h ? format_double(*c.tau_h) : std::string("nan")) << ',' << tau_q_text(c.tau_q) << ','
               << sweep::to_string(c.phase) << '\n';
        }
    }
}

PhaseCsv read_phase_csv(std::istream& is) {
    PhaseCsv out;
    std::string line;
    if (!std::getline(is, line)) fail(ErrorKind::BadValue, "empty phase CSV");
    const auto header = split(line, ',');
    if (header.size() != 5 || header[2] != "tau_h" || header[3] != "tau_q" || header[4] != "class")
        fail(ErrorKind::BadValue, "unexpected phase CSV header '" + line + "'");
    out.x_name = std::string(header[0]);
    out.y_name = std::string(header[1]);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 5) fail(ErrorKind::BadValue, "phase CSV row needs 5 fields: '" + line + "'");
        PhaseCsvRow r;
        r.x = parse_double(f[0]);
        r.y = parse_double(f[1]);
        r.tau_h = parse_double(f[2]);
        r.tau_q = f[3] == "unbounded" ? MaybeUnbounded::unbounded() : MaybeUnbounded::finite(parse_double(f[3]));
        if (f[4] == "quantum") r.phase = sweep::Phase::Quantum;
        else if (f[4] == "classical") r.phase = sweep::Phase::Classical;
        else if (f[4] == "infeasible") r.phase = sweep::Phase::Infeasible;
        else fail(ErrorKind::BadValue, "unknown cell class '" + std::string(f[4]) + "'");
        out.rows.push_back(r);
    }
    return out;
}

ordered_json params_json(const EngineParams& p) {
    return {{"omega1", p.omega1}, {"omega2", p.omega2}, {"tau1", p.tau1}, {"tau2", p.tau2},
            {"T_h", p.T_h},       {"T_c", p.T_c},       {"gamma0", p.gamma0}, {"sigma", p.sigma}};
}

ordered_json cycle_json(const EngineParams& p, const cycle::CycleSolution& s) {
    ordered_json j;
    j["params"] = params_json(p);
    j["feasible"] = s.feasible;
    j["status"] = cycle::to_string(s.status);
    if (!s.feasible) return j;
    j["x"] = s.x;
    j["y"] = s.y;
    j["tau_h"] = s.tau_h;
    j["tau_c"] = s.tau_c;
    j["R"] = s.r;
    j["x_max"] = s.x_max;
    if (s.corners)
        j["corners"] = {{"P_A", s.corners->a}, {"P_B", s.corners->b}, {"P_C", s.corners->c}, {"P_D", s.corners->d}};
    else
        j["corners"] = nullptr;
    j["W_total"] = s.w_total;
    j["W_out"] = s.w_out;
    j["Q_h"] = s.q_h;
    j["Q_c"] = s.q_c;
    j["DeltaS"] = s.delta_s;
    return j;
}

ordered_json quantum_time_json(double omega, double gamma, const MaybeUnbounded& tau_q) {
    return {{"omega", omega}, {"gamma", gamma}, {"tau_q", tau_q_value(tau_q)}};
}

ordered_json phase_summary_json(const sweep::PhaseDiagram& d) {
    ordered_json j;
    j["x_axis"] = axis_json(d.x);
    j["y_axis"] = axis_json(d.y);
    j["base_params"] = params_json(d.base);
    try {
        j["threshold_temperature"] = tau_q_value(lgi::threshold_temperature(d.base.omega2, d.base.gamma0));
    } catch (const Error&) {
        j["threshold_temperature"] = nullptr;
    }

    std::size_t counts[3] = {0, 0, 0};
    for (const auto& c : d.cells) ++counts[static_cast<int>(c.phase)];
    j["counts"] = {{"quantum", counts[0]}, {"classical", counts[1]}, {"infeasible", counts[2]}};

    ordered_json lines = ordered_json::array();
    for (std::size_t iy = 0; iy < d.y.count; ++iy) {
        const auto& r = d.regimes[iy];
        lines.push_back({{"value", d.y.value(iy)},
                         {"regime", sweep::to_string(r.label)},
                         {"transitions", r.transitions},
                         {"boundary_above_range", r.boundary_above_range}});
    }
    j["regimes"] = std::move(lines);

    const auto crit = sweep::critical_values(d);
    j["regime_c1"] = critical_json(crit.c1);
    j["regime_c2"] = critical_json(crit.c2);
    return j;
}

ordered_json error_json(std::string_view kind, std::string_view message, int line, std::string_view key) {
    ordered_json j{{"error", kind}, {"message", message}};
    if (line > 0) j["line"] = line;
    if (!key.empty()) j["key"] = key;
    return j;
}

void write_record_csv(std::ostream& os, const ordered_json& record) {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(record, "", flat);
    os << "key,value\n";
    for (const auto& [k, v] : flat) os << k << ',' << v << '\n';
}

} // namespace otto_lgi::report
