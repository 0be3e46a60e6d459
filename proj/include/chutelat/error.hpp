#pragma once

#include <stdexcept>
#include <string>

namespace chutelat {

/// Raised when a structural property that the theory guarantees (acyclic move
/// graph, unique extrema, existence of meets and joins, ...) fails to hold.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chutelat
