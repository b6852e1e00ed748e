#pragma once

#include <stdexcept>
#include <string>

namespace singcurve {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical precondition was violated by the caller's input.
struct InvalidInput : Error {
  using Error::Error;
};

// The expansion stopped before the requested quantity was determined.
struct TruncationError : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Two computations that must agree did not.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace singcurve
