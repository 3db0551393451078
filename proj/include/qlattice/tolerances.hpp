#pragma once

namespace qlattice::tol {

/// Entrywise checks on freshly constructed matrices and states.
inline constexpr double kConstruction = 1e-12;
/// Agreement between independent evaluation routes.
inline constexpr double kCrossMethod = 1e-9;
/// Lowest eigenvalue accepted for a density operator.
inline constexpr double kDensityEigen = 1e-10;
/// Rounding slack below zero that is clamped instead of rejected.
inline constexpr double kNegativeClamp = 1e-12;
/// Cross-method residual above which the CLI reports failure.
inline constexpr double kCliResidual = 1e-6;
/// Pre-clamp probability excursion outside [0,1] that aborts the CLI.
inline constexpr double kProbabilityRange = 1e-9;
/// |sin(pi x / q)| below which the Dirichlet kernel falls back to its sum.
inline constexpr double kDirichletSingular = 1e-9;
/// Absolute target of the adaptive quadrature.
inline constexpr double kQuadrature = 1e-8;

}  // namespace qlattice::tol
