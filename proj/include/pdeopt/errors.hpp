#pragma once

#include <stdexcept>
#include <string>

namespace pdeopt {

// Linear solver failed to reach its residual tolerance within the iteration cap.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// A state (or evaluation point) violates the active constraint where
// feasibility is a precondition.
class FeasibilityError : public std::runtime_error {
public:
    explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

// No feasible control could be constructed for the given constraint.
class NoFeasibleStartError : public std::runtime_error {
public:
    explicit NoFeasibleStartError(const std::string& what) : std::runtime_error(what) {}
};

// Experiment configuration failed to parse or validate.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pdeopt
