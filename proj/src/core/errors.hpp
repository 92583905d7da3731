#pragma once

#include <stdexcept>
#include <string>

namespace evosir {

// A parameter lies outside its mathematical domain.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation contradicts the current object state (e.g. deleting an edge
// that is not present).
struct state_error : std::logic_error {
    using std::logic_error::logic_error;
};

// An iterative solver or quadrature failed to reach its tolerance.
struct numeric_error : std::runtime_error {
    numeric_error(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
    double residual;
};

// The requested critical value does not exist for these parameters
// (e.g. mean degree too small for any epidemic).
struct no_epidemic_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace evosir
