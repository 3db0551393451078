#pragma once

#include <optional>

#include "qlattice/lattice.hpp"

namespace qlattice {

// Closed forms for the uniform average <p_agree> of a position-momentum-position
// sequence and its continuum, perturbative and bounding approximations. All
// widths are lattice units; none of these build matrices.

/// <p_agree> = w_x/d + 2/(w_x w_p d) sum_{n=1}^{w_p-1} (w_p-n) sin^2(pi n w_x/d) / sin^2(pi n/d).
/// Throws DomainError unless both widths divide d.
[[nodiscard]] double closed_form(Index d, Index w_x, Index w_p);

/// The same average summed over w_x instead (roles of the widths exchanged).
[[nodiscard]] double closed_form_swapped(Index d, Index w_x, Index w_p);

/// d -> infinity limit at fixed Delta x / L: [d sin(pi n/d)]^-2 becomes 1/(pi n)^2.
/// Throws DomainError unless 0 < length_ratio <= 1 and w_p >= 1.
[[nodiscard]] double continuum_form(double length_ratio, Index w_p);

/// Leading 1/d^2 lattice correction,
/// 2/(3 w_x w_p d) sum_{n=1}^{w_p-1} (w_p-n) sin^2(pi n w_x/d).
[[nodiscard]] double perturbation_exact(Index d, Index w_x, Index w_p);

/// The same correction written in continuum variables,
/// (L/Delta x)(2/w_p) sum (w_p-n) sin^2(pi n Delta x/L) / (3 d^2).
[[nodiscard]] double perturbation_exact_continuum_units(Index d, Index w_x, Index w_p);

/// Integral approximation of perturbation_exact for w_p >> 1:
/// (2/3)(w_p/(w_x d)) [1/4 + (cos(2 pi c) - 1)/(8 pi^2 c^2)], c = w_x w_p / d.
[[nodiscard]] double perturbation_integral(Index d, Index w_x, Index w_p);

/// Diagonal (w_x = w_p = w) bounds; each side is present only inside its
/// validity domain.
struct BoundPair {
  std::optional<double> upper;  ///< w^2/d, for w < sqrt(d)
  std::optional<double> lower;  ///< 1 - (2/pi^2)(ln r + 3 pi^2/2)/r with r = w^2/d, for w > sqrt(d)
  Index w;
  Index d;
};

/// w^2/d when w^2 < d, otherwise nullopt. Throws DomainError unless w | d.
[[nodiscard]] std::optional<double> upper_bound(Index d, Index w);
/// The logarithmic lower bound when w^2 > d, otherwise nullopt. Unclamped:
/// negative just above sqrt(d). Throws DomainError unless w | d.
[[nodiscard]] std::optional<double> lower_bound(Index d, Index w);
[[nodiscard]] BoundPair bounds(Index d, Index w);

struct CurvePoint {
  Index w_p;
  double value;
};

/// <p_agree> on the curve w_x w_p = d in the w_p << d regime:
/// 1/w_p + (2/pi^2) sum_{n=1}^{w_p-1} (w_p-n) sin^2(pi n/w_p)/n^2.
[[nodiscard]] CurvePoint curve_value(Index w_p);

/// (2/pi^2)(1-alpha) sin^2(pi alpha)/alpha^2, continued to 2 at alpha = 0.
[[nodiscard]] double curve_integrand(double alpha);

/// Integral of curve_integrand over [0, 1]: the plateau the curve values
/// approach as w_p grows. Throws NumericError if quadrature fails to reach 1e-8.
[[nodiscard]] double curve_limit_integral();

namespace detail {
/// 1/2 - (1 - cos u)/u^2, without cancellation for small u.
[[nodiscard]] double half_minus_versine_ratio(double u);
}  // namespace detail

}  // namespace qlattice
