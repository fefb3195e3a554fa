#pragma once

#include <stdexcept>
#include <string>

namespace lff {

/// Thrown when a caller violates a documented precondition.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Thrown when an iterative routine fails to reach its tolerance
/// (e.g. eigensolver non-convergence, divergent training).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed or unknown configuration input.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lff

#define LFF_REQUIRE(cond, msg)                                   \
    do {                                                         \
        if (!(cond)) throw ::lff::ContractViolation(msg);        \
    } while (0)
