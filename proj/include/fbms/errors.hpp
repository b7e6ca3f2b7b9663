#pragma once

#include <stdexcept>
#include <string>

namespace fbms {

/// Evaluation at a pole (z = 0 with negative Laurent exponents, or a pole on
/// an integration path).
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Root bracketing failed: no sign change on the given interval.
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation produced a non-finite value.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Degenerate metric or vanishing-speed curve; curvature undefined.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A zero of mu: the immersion degenerates there.
struct BranchPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested transform cannot be represented in the data class.
struct RepresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every sample in a verification set was degenerate.
struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File I/O failure (CLI exit code 2).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fbms
