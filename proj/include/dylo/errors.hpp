#pragma once

#include <stdexcept>
#include <string>

namespace dylo {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfBounds : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct TooFewPoints : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptyCloud : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoKeyframes : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dylo
