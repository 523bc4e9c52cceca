#pragma once

#include <stdexcept>
#include <string>

namespace noiselab {

/// Invalid parameters or configuration (bad dimension, profile edges, ...).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated numerical precondition (Nyquist margin, p < 1, ...).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Grid quadrature failed to converge within the refinement budget.
class QuadratureError : public std::runtime_error {
  public:
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// Work size exceeds the configured coefficient/grid budget.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-square-summable weight sequence passed to the Luxemburg solver.
class DivergenceError : public std::runtime_error {
  public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace noiselab
