#pragma once

#include <stdexcept>
#include <string>

namespace qlattice {

/// Input outside an operation's domain (bad index, non-divisor width, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured resource cap (e.g. the brute-force size limit).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical invariant failed (non-convergence, probability out of range).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qlattice
