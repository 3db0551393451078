#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qlattice/errors.hpp"
#include "qlattice/lattice.hpp"

using namespace qlattice;

namespace {

ComplexMatrix matrix_power(const ComplexMatrix& m, Index p) {
  ComplexMatrix r = ComplexMatrix::Identity(m.rows(), m.cols());
  for (Index i = 0; i < p; ++i) r = r * m;
  return r;
}

ComplexMatrix identity(Index d) { return ComplexMatrix::Identity(d, d); }

}  // namespace

TEST_CASE("config rejects non-divisor and out-of-range widths") {
  CHECK_NOTHROW(LatticeConfig(12, 3, 4));
  CHECK_THROWS_AS(LatticeConfig(4, 3, 2), DomainError);
  CHECK_THROWS_AS(LatticeConfig(4, 0, 1), DomainError);
  CHECK_THROWS_AS(LatticeConfig(4, 8, 1), DomainError);
  CHECK_THROWS_AS(LatticeConfig(0, 1, 1), DomainError);

  const LatticeConfig c(12, 3, 4);
  CHECK(c.k_x() == 4);
  CHECK(c.k_p() == 3);
  CHECK(c.k_x() * c.w_x() == c.d());
  CHECK(c.swapped() == LatticeConfig(12, 4, 3));
}

TEST_CASE("dft_matrix small cases") {
  const ComplexMatrix f1 = dft_matrix(LatticeConfig(1, 1, 1));
  CHECK(f1.rows() == 1);
  CHECK(std::abs(f1(0, 0) - Complex(1.0)) < 1e-15);

  const ComplexMatrix f2 = dft_matrix(LatticeConfig(2, 1, 1));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f2(0, 0) - s) < 1e-15);
  CHECK(std::abs(f2(0, 1) - s) < 1e-15);
  CHECK(std::abs(f2(1, 0) - s) < 1e-15);
  CHECK(std::abs(f2(1, 1) + s) < 1e-15);

  const ComplexMatrix f4 = dft_matrix(LatticeConfig(4, 1, 1));
  CHECK(max_abs_diff(f4.adjoint() * f4, identity(4)) < 1e-12);
}

TEST_CASE("unitarity of F, T_X and T_P for d = 1..64") {
  for (Index d = 1; d <= 64; ++d) {
    const LatticeConfig c(d, 1, 1);
    const ComplexMatrix f = dft_matrix(c);
    const ComplexMatrix tx = translation_matrix(c, Basis::position);
    const ComplexMatrix tp = translation_matrix(c, Basis::momentum);
    INFO("d = " << d);
    CHECK(max_abs_diff(f.adjoint() * f, identity(d)) < 1e-12);
    CHECK(max_abs_diff(tx.adjoint() * tx, identity(d)) < 1e-12);
    CHECK(max_abs_diff(tp.adjoint() * tp, identity(d)) < 1e-12);
  }
}

TEST_CASE("dft entries match the unreduced exponential") {
  for (Index d : {3, 7, 16, 31}) {
    const ComplexMatrix f = dft_matrix(LatticeConfig(d, 1, 1));
    for (Index m = 0; m < d; ++m) {
      const ComplexVector ket = oracle::momentum_ket(d, m);
      CHECK((f.col(m) - ket).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("basis states") {
  const LatticeConfig c3(3, 1, 1);
  CHECK(position_basis_state(c3, 0).amplitudes() == ComplexVector::Unit(3, 0));
  CHECK(position_basis_state(c3, 2).amplitudes() == ComplexVector::Unit(3, 2));
  CHECK_THROWS_AS(position_basis_state(c3, 3), DomainError);
  CHECK_THROWS_AS(position_basis_state(c3, -1), DomainError);

  const LatticeConfig c2(2, 1, 1);
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector p0 = momentum_basis_state(c2, 0).amplitudes();
  const ComplexVector p1 = momentum_basis_state(c2, 1).amplitudes();
  CHECK(std::abs(p0(0) - s) < 1e-15);
  CHECK(std::abs(p0(1) - s) < 1e-15);
  CHECK(std::abs(p1(0) - s) < 1e-15);
  CHECK(std::abs(p1(1) + s) < 1e-15);
  CHECK_THROWS_AS(momentum_basis_state(c2, 2), DomainError);

  const LatticeConfig c4(4, 1, 1);
  const Complex overlap =
      momentum_basis_state(c4, 1).amplitudes().dot(momentum_basis_state(c4, 2).amplitudes());
  CHECK(std::abs(overlap) < 1e-12);
}

TEST_CASE("momentum basis states are the columns of F") {
  for (Index d : {1, 2, 5, 8, 13}) {
    const LatticeConfig c(d, 1, 1);
    const ComplexMatrix f = dft_matrix(c);
    for (Index m = 0; m < d; ++m) {
      CHECK((momentum_basis_state(c, m).amplitudes() - f.col(m)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("translation operators") {
  const LatticeConfig c3(3, 1, 1);
  const ComplexMatrix tx = translation_matrix(c3, Basis::position);
  CHECK((tx * ComplexVector::Unit(3, 0) - ComplexVector::Unit(3, 1)).norm() < 1e-15);
  CHECK(max_abs_diff(matrix_power(tx, 3), identity(3)) < 1e-12);

  // Expand |X;1> in momentum, shift every momentum label by one, resum.
  const LatticeConfig c4(4, 1, 1);
  ComplexVector shifted = ComplexVector::Zero(4);
  for (Index m = 0; m < 4; ++m) {
    const Complex coeff = std::conj(oracle::momentum_ket(4, m)(1));
    shifted += coeff * oracle::momentum_ket(4, (m + 1) % 4);
  }
  const Complex phase = std::exp(Complex(0.0, std::numbers::pi / 2.0));
  CHECK((shifted - phase * ComplexVector::Unit(4, 1)).norm() < 1e-12);
  const ComplexMatrix tp = translation_matrix(c4, Basis::momentum);
  CHECK((tp * ComplexVector::Unit(4, 1) - shifted).norm() < 1e-12);

  // T_P shifts the momentum basis.
  for (Index m = 0; m < 4; ++m) {
    CHECK((tp * oracle::momentum_ket(4, m) - oracle::momentum_ket(4, (m + 1) % 4)).norm() < 1e-12);
  }
}

TEST_CASE("translations commute with the opposite basis projectors") {
  for (Index d = 1; d <= 16; ++d) {
    const LatticeConfig c(d, 1, 1);
    const ComplexMatrix tx = translation_matrix(c, Basis::position);
    const ComplexMatrix tp = translation_matrix(c, Basis::momentum);
    for (Index n = 0; n < d; ++n) {
      const ComplexMatrix px = oracle::block_projector(d, false, n, 1);
      const ComplexMatrix pp = oracle::block_projector(d, true, n, 1);
      CHECK((tp * px - px * tp).norm() < 1e-12);
      CHECK((tx * pp - pp * tx).norm() < 1e-12);
    }
  }
}

TEST_CASE("translation periodicity") {
  for (Index d : {1, 2, 3, 7, 12, 20}) {
    const LatticeConfig c(d, 1, 1);
    CHECK(max_abs_diff(matrix_power(translation_matrix(c, Basis::position), d), identity(d)) < 1e-11);
    CHECK(max_abs_diff(matrix_power(translation_matrix(c, Basis::momentum), d), identity(d)) < 1e-11);
  }
}

TEST_CASE("quantum state validation") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(QuantumState::pure(v), DomainError);
  CHECK_NOTHROW(QuantumState::pure(v / std::sqrt(2.0)));

  ComplexMatrix rho = ComplexMatrix::Identity(3, 3) / 3.0;
  CHECK_NOTHROW(QuantumState::density(rho));
  ComplexMatrix bad_trace = ComplexMatrix::Identity(3, 3) / 2.0;
  CHECK_THROWS_AS(QuantumState::density(bad_trace), DomainError);
  ComplexMatrix non_hermitian = rho;
  non_hermitian(0, 1) = Complex(0.0, 0.1);
  CHECK_THROWS_AS(QuantumState::density(non_hermitian), DomainError);
  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(QuantumState::density(negative), DomainError);

  const QuantumState mixed = QuantumState::maximally_mixed(5);
  CHECK(mixed.dim() == 5);
  CHECK_FALSE(mixed.is_pure());
  CHECK_THROWS_AS((void)mixed.amplitudes(), DomainError);
}
