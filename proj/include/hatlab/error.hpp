#pragma once

#include <stdexcept>
#include <string>

namespace hatlab {

// Malformed braid text, script text or database text.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arguments outside the domain of a formula (parity, range, coprimality).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact arithmetic would have overflowed.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// An enumeration grew past its configured cap.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hatlab
