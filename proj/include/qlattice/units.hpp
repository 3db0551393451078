#pragma once

namespace qlattice {

/// Physical scales of a lattice of d sites and total length L with action unit hbar.
/// d is carried as a double so that lattices far beyond 2^53 sites
/// (e.g. a Planck-scale spacing in a 1 m box) can be described; above 2^53 it
/// is no longer an exact integer.
struct PhysicalUnits {
  double hbar;
  double length;   ///< L
  double d;
  double delta_x;  ///< L / d
  double delta_p;  ///< 2 pi hbar / L
  double l_u;      ///< delta_x sqrt(d) = sqrt(delta_x L)

  [[nodiscard]] bool d_is_exact() const noexcept;
};

/// Throws DomainError unless hbar > 0, L > 0 and d >= 1.
[[nodiscard]] PhysicalUnits derive_units(double hbar, double length, double d);

/// The same lattice with spacing delta_x fixed instead of d (d = L / delta_x).
[[nodiscard]] PhysicalUnits units_from_spacing(double hbar, double length, double delta_x);

struct CoarseCell {
  double delta_X;     ///< delta_x w_x
  double delta_P;     ///< delta_p w_p
  double phase_cell;  ///< delta_X delta_P
};

/// Throws DomainError unless 1 <= w <= d for both widths.
[[nodiscard]] CoarseCell coarse_to_units(const PhysicalUnits& units, double w_x, double w_p);

/// Integral-approximated perturbation in proper units,
/// (1/6 pi)(delta_x/Delta_x)^2 [u/2 + (cos u - 1)/u], u = Delta_x Delta_p / hbar.
[[nodiscard]] double perturbation_in_units(const PhysicalUnits& units, double w_x, double w_p);

}  // namespace qlattice
