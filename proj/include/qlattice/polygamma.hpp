#pragma once

namespace qlattice {

/// psi(x) = d/dx ln Gamma(x) for x > 0. Upward recurrence to x > 12, then the
/// asymptotic series through the B_14 term. Throws DomainError for x <= 0.
[[nodiscard]] double digamma(double x);

/// psi'(x) for x > 0, same scheme as digamma.
[[nodiscard]] double trigamma(double x);

struct HarmonicResiduals {
  double first;   ///< |sum 1/(l-x) - [psi(g-x) - psi(x) - pi cot(pi x)]|
  double second;  ///< |sum 1/(l-x)^2 - [-psi'(g-x) - psi'(x) + pi^2 / sin^2(pi x)]|
};

/// Residuals of the finite harmonic sums over l = 1..g-1 against their
/// polygamma closed forms. Requires g >= 2 and 0 < x < 1.
[[nodiscard]] HarmonicResiduals harmonic_sum_identities(long g, double x);

}  // namespace qlattice
