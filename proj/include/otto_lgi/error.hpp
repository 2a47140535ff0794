// error.hpp: error kinds shared by every module

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace otto_lgi {

enum class ErrorKind {
    Domain,                 // argument outside the mathematical domain
    StepTooLarge,           // RK4 step violates the stability bound
    NoQuantumPhase,         // gamma0 >= 2 omega2: no threshold temperature
    DegenerateDenominator,  // Delta P^eq + sigma^2/tau1 <= 0
    InfeasibleCycle,        // optimal thermalization times do not exist
    NoFixedPoint,           // x*y == 1, the cycle map has no unique fixed point
    NotBracketed,           // a regime is absent from the sweep range
    AxisName,               // unknown sweep axis
    UnknownKey,             // config key not recognised
    BadValue,               // config value fails to parse or validate
    MissingRequired,        // config key required by the command is absent
    Usage,                  // command-line usage error
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Config errors carry the offending line (1-based, 0 when not tied to a line)
// and the key.
class ConfigError : public Error {
public:
    ConfigError(ErrorKind kind, const std::string& message, int line, std::string key)
        : Error(kind, message), line_(line), key_(std::move(key)) {}

    int line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    int line_;
    std::string key_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

inline void require_domain(bool ok, const char* what) {
    if (!ok) fail(ErrorKind::Domain, what);
}

} // namespace otto_lgi
