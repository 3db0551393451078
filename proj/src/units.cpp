#include "qlattice/units.hpp"

#include <cmath>
#include <numbers>

#include "qlattice/analytic.hpp"
#include "qlattice/errors.hpp"

namespace qlattice {

namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

}  // namespace

bool PhysicalUnits::d_is_exact() const noexcept {
  return d <= kExactIntegerLimit && std::floor(d) == d;
}

PhysicalUnits derive_units(double hbar, double length, double d) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be > 0");
  if (!(length > 0.0)) throw DomainError("length must be > 0");
  if (!(d >= 1.0) || !std::isfinite(d)) throw DomainError("d must be >= 1");
  const double delta_x = length / d;
  return {hbar, length, d, delta_x, 2.0 * std::numbers::pi * hbar / length,
          delta_x * std::sqrt(d)};
}

PhysicalUnits units_from_spacing(double hbar, double length, double delta_x) {
  if (!(delta_x > 0.0)) throw DomainError("delta_x must be > 0");
  return derive_units(hbar, length, length / delta_x);
}

CoarseCell coarse_to_units(const PhysicalUnits& units, double w_x, double w_p) {
  if (!(w_x >= 1.0 && w_x <= units.d) || !(w_p >= 1.0 && w_p <= units.d)) {
    throw DomainError("coarse widths must lie in [1, d]");
  }
  const double dx = units.delta_x * w_x;
  const double dp = units.delta_p * w_p;
  return {dx, dp, dx * dp};
}

double perturbation_in_units(const PhysicalUnits& units, double w_x, double w_p) {
  const CoarseCell cell = coarse_to_units(units, w_x, w_p);
  const double u = cell.phase_cell / units.hbar;
  const double ratio = units.delta_x / cell.delta_X;
  // u/2 + (cos u - 1)/u == u * (1/2 - (1 - cos u)/u^2)
  return ratio * ratio / (6.0 * std::numbers::pi) * u * detail::half_minus_versine_ratio(u);
}

}  // namespace qlattice
