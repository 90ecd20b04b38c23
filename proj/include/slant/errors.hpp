#pragma once

#include <stdexcept>
#include <string>

namespace slant {

// Bad input: malformed config, unknown id, invalid parameter.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation could not be carried out or an invariant failed.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frame or structure undefined at a point (rank drop, theta at 0 or pi/2).
struct DegenerateError : NumericError {
  using NumericError::NumericError;
};

}  // namespace slant
