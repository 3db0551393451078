#pragma once

#include <functional>

namespace qlattice {

struct QuadratureResult {
  double value;
  double error;      ///< summed |K15 - G7| over the final partition
  int intervals;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Bisects the interval with the largest error estimate until the summed
/// estimate is below abs_tol. Throws NumericError if max_intervals is reached
/// first. The integrand is never evaluated at the endpoints.
[[nodiscard]] QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                                  double a, double b, double abs_tol,
                                                  int max_intervals = 2000);

}  // namespace qlattice
