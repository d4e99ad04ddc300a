#pragma once

#include <stdexcept>

namespace dea {

// Malformed input: bad dimensions, non-finite or non-positive data, unknown
// names, unparseable files. Raised before any solving starts.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Internal solver failure: iteration cap, broken post-conditions, degenerate
// scales. Indicates a bug or a pathological instance, not bad user input.
class SolverError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace dea
