#pragma once

#include <stdexcept>
#include <string>

namespace bck {

// Malformed input: bad file syntax, wrong magic line, entries out of range.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input that violates an operation's precondition
// (table fails certification, set is not an ideal, element out of scope).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request exceeds a configured cap (carrier order, subset-scan width,
// candidate-map count) or a hard representation limit.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A law that provably holds on certified inputs failed to hold. Reaching
// this means the checker or a derivation is wrong; it is never an input error.
struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw InternalCheckError("internal check failed: " + what);
}

}  // namespace bck
