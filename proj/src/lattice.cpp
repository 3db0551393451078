#include "qlattice/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qlattice/errors.hpp"
#include "qlattice/tolerances.hpp"

namespace qlattice {

namespace {

void check_width(Index d, Index w, const char* name) {
  if (w < 1 || w > d) {
    throw DomainError(std::string(name) + "=" + std::to_string(w) +
                      " must lie in [1, d=" + std::to_string(d) + "]");
  }
  if (d % w != 0) {
    throw DomainError(std::string(name) + "=" + std::to_string(w) +
                      " does not divide d=" + std::to_string(d));
  }
}

void check_index(const LatticeConfig& config, Index i, const char* what) {
  if (i < 0 || i >= config.d()) {
    throw DomainError(std::string(what) + " index " + std::to_string(i) +
                      " outside [0, " + std::to_string(config.d()) + ")");
  }
}

}  // namespace

LatticeConfig::LatticeConfig(Index d, Index w_x, Index w_p)
    : d_(d), w_x_(w_x), w_p_(w_p) {
  if (d < 1) throw DomainError("lattice dimension d must be >= 1");
  check_width(d, w_x, "w_x");
  check_width(d, w_p, "w_p");
}

QuantumState QuantumState::pure(ComplexVector amplitudes) {
  if (amplitudes.size() == 0) throw DomainError("empty state vector");
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > tol::kConstruction) {
    throw DomainError("pure state not normalized: |psi| = " + std::to_string(norm));
  }
  return {Kind::pure, std::move(amplitudes), ComplexMatrix{}};
}

QuantumState QuantumState::density(ComplexMatrix rho) {
  if (rho.rows() == 0 || rho.rows() != rho.cols()) {
    throw DomainError("density operator must be a non-empty square matrix");
  }
  if (max_abs_diff(rho, rho.adjoint()) > tol::kConstruction) {
    throw DomainError("density operator is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > tol::kConstruction) {
    throw DomainError("density operator trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tol::kDensityEigen) {
    throw DomainError("density operator has a negative eigenvalue");
  }
  return {Kind::density, ComplexVector{}, std::move(rho)};
}

QuantumState QuantumState::maximally_mixed(Index d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  ComplexMatrix rho = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  return {Kind::density, ComplexVector{}, std::move(rho)};
}

Index QuantumState::dim() const noexcept {
  return kind_ == Kind::pure ? vec_.size() : mat_.rows();
}

const ComplexVector& QuantumState::amplitudes() const {
  if (kind_ != Kind::pure) throw DomainError("amplitudes() on a density operator");
  return vec_;
}

ComplexMatrix QuantumState::density_matrix() const {
  if (kind_ == Kind::density) return mat_;
  return vec_ * vec_.adjoint();
}

Complex unit_phase(Index m, Index n, Index d) {
  // Reduce before converting so the angle stays accurate for large d.
  const Index r = ((m % d) * (n % d)) % d;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

ComplexMatrix dft_matrix(const LatticeConfig& config) {
  const Index d = config.d();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(d, d);
  for (Index m = 0; m < d; ++m) {
    for (Index n = 0; n < d; ++n) f(m, n) = unit_phase(m, n, d) * scale;
  }
  return f;
}

QuantumState position_basis_state(const LatticeConfig& config, Index n) {
  check_index(config, n, "position");
  ComplexVector v = ComplexVector::Zero(config.d());
  v(n) = 1.0;
  return QuantumState::pure(std::move(v));
}

QuantumState momentum_basis_state(const LatticeConfig& config, Index m) {
  check_index(config, m, "momentum");
  const Index d = config.d();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexVector v(d);
  for (Index n = 0; n < d; ++n) v(n) = unit_phase(m, n, d) * scale;
  return QuantumState::pure(std::move(v));
}

ComplexMatrix translation_matrix(const LatticeConfig& config, Basis basis) {
  const Index d = config.d();
  ComplexMatrix t = ComplexMatrix::Zero(d, d);
  if (basis == Basis::position) {
    for (Index n = 0; n < d; ++n) t((n + 1) % d, n) = 1.0;
  } else {
    // |P;m+1> = exp(i 2 pi n / d) |P;m> componentwise in position.
    for (Index n = 0; n < d; ++n) t(n, n) = unit_phase(1, n, d);
  }
  return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("matrix shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qlattice
