#pragma once

#include <complex>
#include <cstdint>
#include <Eigen/Dense>

namespace qlattice {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = std::int64_t;

enum class Basis { position, momentum };

/// Geometry of a periodic lattice with d sites coarse-grained into blocks of
/// w_x sites in position and w_p sites in momentum. Both widths divide d.
class LatticeConfig {
 public:
  /// Throws DomainError unless 1 <= w <= d and w | d for both widths.
  LatticeConfig(Index d, Index w_x, Index w_p);

  [[nodiscard]] Index d() const noexcept { return d_; }
  [[nodiscard]] Index w_x() const noexcept { return w_x_; }
  [[nodiscard]] Index w_p() const noexcept { return w_p_; }
  [[nodiscard]] Index k_x() const noexcept { return d_ / w_x_; }
  [[nodiscard]] Index k_p() const noexcept { return d_ / w_p_; }

  [[nodiscard]] Index width(Basis b) const noexcept {
    return b == Basis::position ? w_x_ : w_p_;
  }
  [[nodiscard]] Index intervals(Basis b) const noexcept {
    return b == Basis::position ? k_x() : k_p();
  }

  /// Same lattice with the two widths exchanged.
  [[nodiscard]] LatticeConfig swapped() const { return {d_, w_p_, w_x_}; }

  friend bool operator==(const LatticeConfig&, const LatticeConfig&) = default;

 private:
  Index d_;
  Index w_x_;
  Index w_p_;
};

/// A pure state vector or a density operator, both in the position basis.
class QuantumState {
 public:
  enum class Kind { pure, density };

  /// Validates unit norm within 1e-12.
  static QuantumState pure(ComplexVector amplitudes);
  /// Validates Hermiticity and unit trace within 1e-12 and eigenvalues >= -1e-10.
  static QuantumState density(ComplexMatrix rho);
  /// The maximally mixed state I/d.
  static QuantumState maximally_mixed(Index d);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_pure() const noexcept { return kind_ == Kind::pure; }
  [[nodiscard]] Index dim() const noexcept;

  /// Precondition: is_pure().
  [[nodiscard]] const ComplexVector& amplitudes() const;
  /// Density operator; built as |psi><psi| for pure states.
  [[nodiscard]] ComplexMatrix density_matrix() const;

 private:
  QuantumState(Kind kind, ComplexVector v, ComplexMatrix m)
      : kind_(kind), vec_(std::move(v)), mat_(std::move(m)) {}

  Kind kind_;
  ComplexVector vec_;
  ComplexMatrix mat_;
};

/// F[m][n] = exp(i 2 pi m n / d) / sqrt(d). Column m is |P;m> in the position basis.
[[nodiscard]] ComplexMatrix dft_matrix(const LatticeConfig& config);

/// |X;n>. Throws DomainError when n is outside [0, d).
[[nodiscard]] QuantumState position_basis_state(const LatticeConfig& config, Index n);

/// |P;m> expanded in the position basis. Throws DomainError when m is outside [0, d).
[[nodiscard]] QuantumState momentum_basis_state(const LatticeConfig& config, Index m);

/// Unit cyclic shift of the chosen basis: T|B;n> = |B;n+1 mod d>.
/// T_P is diagonal in position with eigenvalue exp(i 2 pi n / d).
[[nodiscard]] ComplexMatrix translation_matrix(const LatticeConfig& config, Basis basis);

/// exp(i 2 pi m n / d) with the exponent reduced mod d before scaling.
[[nodiscard]] Complex unit_phase(Index m, Index n, Index d);

/// max |a_ij - b_ij|.
[[nodiscard]] double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qlattice
