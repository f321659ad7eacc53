#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcmc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or unsupported dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A matrix entry or weight that is not strictly positive (or not finite).
class InvalidEntryError : public Error {
 public:
  using Error::Error;
};

/// A numeric parameter outside its admissible range (deviation, scale, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Power iteration failed to reach the residual tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(double residual, std::size_t iterations)
      : Error("power iteration did not converge after " +
              std::to_string(iterations) +
              " iterations (residual " + std::to_string(residual) + ")"),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  std::size_t iterations_;
};

/// Aggregation over zero trial records.
class EmptyCellError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcmc
