#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace poroflow {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (e.g. negative
// discriminant of the fluid-rich branch, pressure below critical).
struct DomainError : Error {
    using Error::Error;
};

// Iterative solver failed; carries the best iterate seen for diagnostics.
struct ConvergenceError : Error {
    std::vector<long double> best_iterate;
    double best_residual = 0.0;
    int iterations = 0;

    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
    ConvergenceError(const std::string& msg, std::vector<long double> best,
                     double residual, int iters)
        : Error(msg), best_iterate(std::move(best)), best_residual(residual),
          iterations(iters) {}
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Invariant violations found while validating inputs; lists every violation.
struct ValidationError : Error {
    std::vector<std::string> violations;

    explicit ValidationError(std::vector<std::string> v)
        : Error(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "validation failed:";
        for (const auto& e : v) s += "\n  - " + e;
        return s;
    }
};

struct FeatureError : Error {
    using Error::Error;
};

struct StepSizeError : Error {
    double t = 0.0;
    StepSizeError(const std::string& msg, double time) : Error(msg), t(time) {}
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace poroflow
