#pragma once

#include <stdexcept>
#include <string>

namespace qloc {

/// Bad user-supplied configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical breakdown: non-convergence, invariant violation (CLI exit code 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem / serialization failure (CLI exit code 4).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested bias is at or below zero: no finite shot budget resolves it.
struct HorizonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A two-outcome measurement with outcome probability 0 or 1; Fisher
/// information is undefined there.
struct DegenerateOutcomeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace qloc
