#pragma once

#include <stdexcept>
#include <string>

namespace retcn {

// Validation errors (bad arguments, malformed inputs). The CLI maps these
// to exit code 1.
struct DimMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadDistParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadAdjacency : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadChannelCount : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadProbability : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadLabel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct JointOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroDim : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dataset file errors. Also exit code 1: the input file is at fault.
struct BadMagic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TruncatedFile : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimOverflow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Runtime failures (exit code 2).
struct Overflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};
struct Divergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace retcn
