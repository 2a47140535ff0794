#include "otto_lgi/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <system_error>

namespace otto_lgi::config {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(int line, const std::string& key, const std::string& why) {
    throw ConfigError(ErrorKind::BadValue, "line " + std::to_string(line) + ": " + key + ": " + why, line, key);
}

double parse_real(std::string_view v, int line, const std::string& key) {
    double out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out))
        bad_value(line, key, "expected a finite number, got '" + std::string(v) + "'");
    return out;
}

std::size_t parse_count(std::string_view v, int line, const std::string& key) {
    std::size_t out{};
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size())
        bad_value(line, key, "expected a non-negative integer, got '" + std::string(v) + "'");
    return out;
}

bool parse_bool(std::string_view v, int line, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    bad_value(line, key, "expected true or false, got '" + std::string(v) + "'");
}

using Setter = std::function<void(RunConfig&, std::string_view, int, const std::string&)>;

Setter real(double RunConfig::*field, std::function<bool(double)> ok, const char* rule) {
    return [=](RunConfig& c, std::string_view v, int line, const std::string& key) {
        const double x = parse_real(v, line, key);
        if (!ok(x)) bad_value(line, key, rule);
        c.*field = x;
    };
}

Setter optional_real(std::optional<double> RunConfig::*field, std::function<bool(double)> ok, const char* rule) {
    return [=](RunConfig& c, std::string_view v, int line, const std::string& key) {
        const double x = parse_real(v, line, key);
        if (!ok(x)) bad_value(line, key, rule);
        c.*field = x;
    };
}

bool positive(double x) { return x > 0.0; }
bool non_negative(double x) { return x >= 0.0; }
bool temperature(double x) { return x >= min_temperature; }

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = [] {
        std::map<std::string, Setter, std::less<>> t;
        t["omega1"] = real(&RunConfig::omega1, positive, "must be positive");
        t["omega2"] = real(&RunConfig::omega2, positive, "must be positive");
        t["tau1"] = real(&RunConfig::tau1, positive, "must be positive");
        t["tau2"] = real(&RunConfig::tau2, positive, "must be positive");
        t["T_h"] = optional_real(&RunConfig::T_h, temperature, "must be >= 1e-12");
        t["T_c"] = real(&RunConfig::T_c, temperature, "must be >= 1e-12");
        t["gamma0"] = real(&RunConfig::gamma0, positive, "must be positive");
        t["sigma"] = real(&RunConfig::sigma, non_negative, "must be non-negative");
        t["sigma_bar"] = optional_real(&RunConfig::sigma_bar, non_negative, "must be non-negative");
        t["tol"] = real(&RunConfig::tol, positive, "must be positive");
        t["equal_gamma"] = [](RunConfig& c, std::string_view v, int line, const std::string& key) {
            c.equal_gamma = parse_bool(v, line, key);
        };
        t["points_per_period"] = [](RunConfig& c, std::string_view v, int line, const std::string& key) {
            c.points_per_period = parse_count(v, line, key);
            if (c.points_per_period < 2) bad_value(line, key, "must be at least 2");
        };
        auto grid = [&t](const std::string& prefix, GridSpec RunConfig::*g, bool temperature_axis) {
            t[prefix + "_min"] = [=](RunConfig& c, std::string_view v, int line, const std::string& key) {
                const double x = parse_real(v, line, key);
                if (temperature_axis ? !(x > 0.0) : !(x >= 0.0)) bad_value(line, key, "out of range");
                (c.*g).min = x;
            };
            t[prefix + "_max"] = [=](RunConfig& c, std::string_view v, int line, const std::string& key) {
                const double x = parse_real(v, line, key);
                if (temperature_axis ? !(x > 0.0) : !(x >= 0.0)) bad_value(line, key, "out of range");
                (c.*g).max = x;
            };
            t[prefix + "_count"] = [=](RunConfig& c, std::string_view v, int line, const std::string& key) {
                (c.*g).count = parse_count(v, line, key);
                if ((c.*g).count < 2) bad_value(line, key, "must be at least 2");
            };
        };
        grid("T_h", &RunConfig::T_h_grid, true);
        grid("T_c", &RunConfig::T_c_grid, true);
        grid("sigma_bar", &RunConfig::sigma_bar_grid, false);
        t["output_prefix"] = [](RunConfig& c, std::string_view v, int, const std::string&) {
            c.output_prefix = std::string(v);
        };
        t["format"] = [](RunConfig& c, std::string_view v, int line, const std::string& key) {
            if (v == "json") c.format = OutputFormat::Json;
            else if (v == "csv") c.format = OutputFormat::Csv;
            else bad_value(line, key, "expected json or csv");
        };
        return t;
    }();
    return table;
}

} // namespace

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::map<std::string, int, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(ErrorKind::BadValue, "line " + std::to_string(line_no) + ": expected 'key = value'",
                              line_no, "");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));

        const auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError(ErrorKind::UnknownKey, "line " + std::to_string(line_no) + ": unknown key '" + key + "'",
                              line_no, key);
        if (const auto prev = seen.find(key); prev != seen.end())
            bad_value(line_no, key, "duplicate key (first set on line " + std::to_string(prev->second) + ")");
        if (value.empty()) bad_value(line_no, key, "missing value");
        it->second(cfg, value, line_no, key);
        seen.emplace(key, line_no);
    }

    auto line_of = [&](const char* key) {
        const auto it = seen.find(key);
        return it == seen.end() ? 0 : it->second;
    };
    if (!(cfg.omega1 < cfg.omega2)) {
        const int l = std::max(line_of("omega1"), line_of("omega2"));
        bad_value(l, line_of("omega2") >= line_of("omega1") ? "omega2" : "omega1", "omega1 must be smaller than omega2");
    }
    if (cfg.sigma_bar && seen.contains("sigma"))
        bad_value(line_of("sigma_bar"), "sigma_bar", "sigma and sigma_bar are mutually exclusive");
    for (const auto& [prefix, grid] : {std::pair{"T_h", &cfg.T_h_grid}, std::pair{"T_c", &cfg.T_c_grid},
                                       std::pair{"sigma_bar", &cfg.sigma_bar_grid}}) {
        if (!(grid->min <= grid->max)) {
            const std::string key = std::string(prefix) + "_max";
            bad_value(std::max(line_of((std::string(prefix) + "_min").c_str()), line_of(key.c_str())), key,
                      "grid max is below grid min");
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Usage, "cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

EngineParams RunConfig::engine(std::optional<double> T_h_fallback) const {
    EngineParams p;
    p.omega1 = omega1;
    p.omega2 = omega2;
    p.tau1 = tau1;
    p.tau2 = tau2;
    p.T_c = T_c;
    p.gamma0 = gamma0;
    p.sigma = sigma_bar ? *sigma_bar * tau2 : sigma;
    if (T_h) p.T_h = *T_h;
    else if (T_h_fallback) p.T_h = *T_h_fallback;
    return p;
}

EngineParams RunConfig::engine_with_T_h() const {
    if (!T_h) throw ConfigError(ErrorKind::MissingRequired, "T_h is required by this command", 0, "T_h");
    return engine();
}

} // namespace otto_lgi::config
