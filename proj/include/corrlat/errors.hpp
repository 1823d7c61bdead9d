#ifndef CORRLAT_ERRORS_HPP
#define CORRLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace corrlat {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Quadrature or iteration budget exhausted before reaching tolerance.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Root finder given a bracket without a sign change, or a scan found none.
struct NoSignChange : std::runtime_error {
    explicit NoSignChange(const std::string& msg) : std::runtime_error(msg) {}
};

// Lateral-force amplitude A is below the null threshold; the phase is undefined.
struct NullAmplitude : std::runtime_error {
    explicit NullAmplitude(const std::string& msg) : std::runtime_error(msg) {}
};

// Corrugation amplitude too large for the first-order treatment (a/z0 > 0.1).
struct PerturbativityViolation : std::runtime_error {
    explicit PerturbativityViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyProfile : std::runtime_error {
    explicit EmptyProfile(const std::string& msg) : std::runtime_error(msg) {}
};

// Sampled profile evaluated outside its grid.
struct OutOfGrid : std::out_of_range {
    explicit OutOfGrid(const std::string& msg) : std::out_of_range(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace corrlat

#endif
