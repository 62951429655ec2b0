// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sharpc {

/// Argument outside the domain of a function (gamma at x <= 0, unsupported
/// Bessel order, non-positive domain size, unknown boundary tag, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exponent triple (n, p, q) violates the admissibility restrictions of the
/// inequality it was requested for.
class InadmissibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method ran out of budget or lost its bracket.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mesh failed one of its structural invariants.
class MeshError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sharpc
