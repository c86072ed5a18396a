#pragma once

#include <stdexcept>
#include <string>

namespace sevenfour {

/// Precondition violated by the caller (bad range, zero polynomial, even d, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but larger than the configured working bound.
class UnsupportedSize : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed; indicates an arithmetic bug.
class InternalConsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A checked mathematical claim did not hold for the supplied data.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or factoring budget ran out before the goal was reached.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularCurve : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

}  // namespace sevenfour
