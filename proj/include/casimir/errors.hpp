#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's stated domain.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation exactly at a pole of a material response function.
struct SingularityError : Error {
    using Error::Error;
};

// Effective cavity distance diverges (material response crosses zero).
struct DivergentDistanceError : Error {
    using Error::Error;
};

// Closed-form force requested at zero effective distance.
struct DivergentForceError : Error {
    using Error::Error;
};

// Layered-stress denominator vanished; the mode structure is degenerate.
struct DegenerateModeError : Error {
    using Error::Error;
};

// Integrand produced a non-finite value; carries the offending abscissa.
struct IntegrandError : Error {
    double abscissa;
    IntegrandError(const std::string& what, double x) : Error(what), abscissa(x) {}
};

}  // namespace casimir
