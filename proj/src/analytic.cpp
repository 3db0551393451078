#include "qlattice/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qlattice/errors.hpp"
#include "qlattice/quadrature.hpp"
#include "qlattice/summation.hpp"
#include "qlattice/tolerances.hpp"

namespace qlattice {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(pi num / den) with num reduced mod 2 den first.
double sin_pi_ratio(Index num, Index den) {
  // Reduce to |r| <= den/2 so integer multiples of den give an exact zero.
  Index r = num % (2 * den);
  if (r < 0) r += 2 * den;
  double sign = 1.0;
  if (r >= den) {
    r -= den;
    sign = -1.0;
  }
  if (2 * r > den) r -= den, sign = -sign;
  return sign * std::sin(kPi * static_cast<double>(r) / static_cast<double>(den));
}

// Sum over n = 1..outer-1 of (outer-n) sin^2(pi n inner/d) / sin^2(pi n/d).
double lattice_sum(Index d, Index inner, Index outer) {
  CompensatedSum sum;
  for (Index n = 1; n < outer; ++n) {
    const double num = sin_pi_ratio(n * inner, d);
    const double den = sin_pi_ratio(n, d);
    sum += static_cast<double>(outer - n) * (num * num) / (den * den);
  }
  return sum.value();
}

void check_divisor(Index d, Index w) {
  if (d < 1) throw DomainError("d must be >= 1");
  if (w < 1 || w > d || d % w != 0) {
    throw DomainError("width " + std::to_string(w) + " does not divide d=" + std::to_string(d));
  }
}

void check_positive(Index d, Index w_x, Index w_p) {
  if (d < 1 || w_x < 1 || w_p < 1) throw DomainError("d, w_x, w_p must be >= 1");
}

}  // namespace

double closed_form(Index d, Index w_x, Index w_p) {
  const LatticeConfig config(d, w_x, w_p);
  const double dd = static_cast<double>(d);
  const double wx = static_cast<double>(w_x);
  const double wp = static_cast<double>(w_p);
  return wx / dd + 2.0 / (wx * wp * dd) * lattice_sum(d, w_x, w_p);
}

double closed_form_swapped(Index d, Index w_x, Index w_p) {
  const LatticeConfig config(d, w_x, w_p);
  const double dd = static_cast<double>(d);
  const double wx = static_cast<double>(w_x);
  const double wp = static_cast<double>(w_p);
  return wp / dd + 2.0 / (wx * wp * dd) * lattice_sum(d, w_p, w_x);
}

double continuum_form(double length_ratio, Index w_p) {
  if (!(length_ratio > 0.0 && length_ratio <= 1.0)) {
    throw DomainError("length ratio must lie in (0, 1]");
  }
  if (w_p < 1) throw DomainError("w_p must be >= 1");
  CompensatedSum sum;
  for (Index n = 1; n < w_p; ++n) {
    const double nd = static_cast<double>(n);
    const double s = std::sin(kPi * nd * length_ratio);
    sum += static_cast<double>(w_p - n) * s * s / (kPi * kPi * nd * nd);
  }
  return length_ratio + (1.0 / length_ratio) * (2.0 / static_cast<double>(w_p)) * sum.value();
}

double perturbation_exact(Index d, Index w_x, Index w_p) {
  const LatticeConfig config(d, w_x, w_p);
  CompensatedSum sum;
  for (Index n = 1; n < w_p; ++n) {
    const double s = sin_pi_ratio(n * w_x, d);
    sum += static_cast<double>(w_p - n) * s * s;
  }
  const double denom =
      3.0 * static_cast<double>(w_x) * static_cast<double>(w_p) * static_cast<double>(d);
  return 2.0 / denom * sum.value();
}

double perturbation_exact_continuum_units(Index d, Index w_x, Index w_p) {
  const LatticeConfig config(d, w_x, w_p);
  const double dd = static_cast<double>(d);
  const double ratio = static_cast<double>(w_x) / dd;  // Delta x / L
  CompensatedSum sum;
  for (Index n = 1; n < w_p; ++n) {
    const double s = std::sin(kPi * static_cast<double>(n) * ratio);
    sum += static_cast<double>(w_p - n) * s * s / (3.0 * dd * dd);
  }
  return (1.0 / ratio) * (2.0 / static_cast<double>(w_p)) * sum.value();
}

double detail::half_minus_versine_ratio(double u) {
  if (std::abs(u) < 2.0) {
    // sum_{k>=1} (-1)^(k+1) u^(2k) / (2k+2)!
    const double u2 = u * u;
    double term = u2 / 24.0;
    double sum = 0.0;
    for (int k = 1; k <= 16; ++k) {
      sum += term;
      term *= -u2 / static_cast<double>((2 * k + 3) * (2 * k + 4));
    }
    return sum;
  }
  return 0.5 + (std::cos(u) - 1.0) / (u * u);
}

double perturbation_integral(Index d, Index w_x, Index w_p) {
  check_positive(d, w_x, w_p);
  const double dd = static_cast<double>(d);
  const double wx = static_cast<double>(w_x);
  const double wp = static_cast<double>(w_p);
  const double c = wx * wp / dd;
  // 1/4 + (cos(2 pi c) - 1)/(8 pi^2 c^2) == (1/2) * half_minus_versine_ratio(2 pi c)
  const double bracket = 0.5 * detail::half_minus_versine_ratio(2.0 * kPi * c);
  return (2.0 / 3.0) * (wp / (wx * dd)) * bracket;
}

std::optional<double> upper_bound(Index d, Index w) {
  check_divisor(d, w);
  if (w * w >= d) return std::nullopt;
  return static_cast<double>(w * w) / static_cast<double>(d);
}

std::optional<double> lower_bound(Index d, Index w) {
  check_divisor(d, w);
  if (w * w <= d) return std::nullopt;
  const double r = static_cast<double>(w) * static_cast<double>(w) / static_cast<double>(d);
  return 1.0 - (2.0 / (kPi * kPi)) * (std::log(r) + 1.5 * kPi * kPi) / r;
}

BoundPair bounds(Index d, Index w) { return {upper_bound(d, w), lower_bound(d, w), w, d}; }

CurvePoint curve_value(Index w_p) {
  if (w_p < 1) throw DomainError("w_p must be >= 1");
  CompensatedSum sum;
  for (Index n = 1; n < w_p; ++n) {
    const double s = sin_pi_ratio(n, w_p);
    const double nd = static_cast<double>(n);
    sum += static_cast<double>(w_p - n) * s * s / (nd * nd);
  }
  return {w_p, 1.0 / static_cast<double>(w_p) + 2.0 / (kPi * kPi) * sum.value()};
}

double curve_integrand(double alpha) {
  constexpr double scale = 2.0 / (kPi * kPi);
  if (alpha == 0.0) return scale * kPi * kPi;
  const double s = std::sin(kPi * alpha);
  return scale * (1.0 - alpha) * s * s / (alpha * alpha);
}

double curve_limit_integral() {
  return integrate_adaptive(curve_integrand, 0.0, 1.0, tol::kQuadrature).value;
}

}  // namespace qlattice
