#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "qlattice/agree.hpp"
#include "qlattice/coarse.hpp"
#include "qlattice/errors.hpp"

using namespace qlattice;

namespace {

ComplexMatrix identity(Index d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix diag(std::initializer_list<double> entries) {
  Eigen::VectorXd v(static_cast<Index>(entries.size()));
  Index i = 0;
  for (double e : entries) v(i++) = e;
  return v.cast<Complex>().asDiagonal();
}

ComplexMatrix matrix_power(const ComplexMatrix& m, Index p) {
  ComplexMatrix r = identity(m.rows());
  for (Index i = 0; i < p; ++i) r = r * m;
  return r;
}

}  // namespace

TEST_CASE("position projector examples") {
  CHECK(max_abs_diff(projector(LatticeConfig(4, 4, 1), Basis::position, 0).matrix(), identity(4)) <
        1e-15);
  CHECK(max_abs_diff(projector(LatticeConfig(4, 2, 1), Basis::position, 1).matrix(),
                     diag({0, 0, 1, 1})) < 1e-15);
  CHECK_THROWS_AS(projector(LatticeConfig(4, 2, 1), Basis::position, 2), DomainError);
  CHECK_THROWS_AS(projector(LatticeConfig(4, 2, 2), Basis::momentum, -1), DomainError);
}

TEST_CASE("momentum projector is a rank-w_p projector built from F columns") {
  const LatticeConfig c(4, 1, 2);
  const ComplexMatrix p = projector(c, Basis::momentum, 0).matrix();
  CHECK(std::abs(p.trace() - Complex(2.0)) < 1e-12);
  CHECK(max_abs_diff(p * p, p) < 1e-12);
  CHECK(max_abs_diff(p, p.adjoint()) < 1e-12);
  CHECK(max_abs_diff(p, oracle::block_projector(4, true, 0, 2)) < 1e-12);
}

TEST_CASE("projector invariants, completeness and orthogonality for d <= 32") {
  for (Index d = 1; d <= 32; ++d) {
    for (Index w : divisors(d)) {
      const LatticeConfig c(d, w, w);
      for (Basis b : {Basis::position, Basis::momentum}) {
        ComplexMatrix total = ComplexMatrix::Zero(d, d);
        std::vector<ComplexMatrix> ps;
        for (Index i = 0; i < c.intervals(b); ++i) ps.push_back(projector(c, b, i).matrix());
        for (std::size_t i = 0; i < ps.size(); ++i) {
          total += ps[i];
          CHECK(max_abs_diff(ps[i] * ps[i], ps[i]) < 1e-12);
          CHECK(max_abs_diff(ps[i], ps[i].adjoint()) < 1e-12);
          CHECK(std::abs(ps[i].trace() - Complex(static_cast<double>(w))) < 1e-12);
          if (b == Basis::position && i + 1 < ps.size()) {
            CHECK((ps[i] * ps[i + 1]).cwiseAbs().maxCoeff() < 1e-12);
          }
        }
        INFO("d=" << d << " w=" << w);
        CHECK(max_abs_diff(total, identity(d)) < 1e-12);
      }
    }
  }
}

TEST_CASE("position projectors are translates of the first block") {
  for (Index d : {4, 6, 12, 24}) {
    for (Index w : divisors(d)) {
      const LatticeConfig c(d, w, 1);
      const ComplexMatrix tx = translation_matrix(c, Basis::position);
      const ComplexMatrix p0 = projector(c, Basis::position, 0).matrix();
      for (Index nu = 0; nu < c.k_x(); ++nu) {
        const ComplexMatrix shift = matrix_power(tx, nu * w);
        CHECK(max_abs_diff(projector(c, Basis::position, nu).matrix(),
                           shift * p0 * shift.adjoint()) < 1e-12);
      }
    }
  }
}

TEST_CASE("coarse observables") {
  CHECK(max_abs_diff(coarse_observable(LatticeConfig(4, 2, 1), Basis::position),
                     diag({0, 0, 1, 1})) < 1e-15);
  CHECK(max_abs_diff(coarse_observable(LatticeConfig(3, 1, 1), Basis::position),
                     diag({0, 1, 2})) < 1e-15);

  const ComplexMatrix pcg = coarse_observable(LatticeConfig(4, 1, 2), Basis::momentum);
  CHECK(max_abs_diff(pcg, pcg.adjoint()) < 1e-12);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(pcg);
  const Eigen::VectorXd ev = eig.eigenvalues();
  CHECK(std::abs(ev(0)) < 1e-12);
  CHECK(std::abs(ev(1)) < 1e-12);
  CHECK(std::abs(ev(2) - 1.0) < 1e-12);
  CHECK(std::abs(ev(3) - 1.0) < 1e-12);
}

TEST_CASE("truncated momentum states") {
  const auto full = truncated_momentum_state(LatticeConfig(4, 4, 1), 0, 0);
  for (Index n = 0; n < 4; ++n) CHECK(std::abs(full.amplitudes(n) - Complex(0.5)) < 1e-15);

  const auto half = truncated_momentum_state(LatticeConfig(4, 2, 1), 0, 0);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(half.amplitudes(0) - s) < 1e-15);
  CHECK(std::abs(half.amplitudes(1) - s) < 1e-15);
  CHECK(std::abs(half.amplitudes(2)) == 0.0);
  CHECK(std::abs(half.amplitudes(3)) == 0.0);

  const LatticeConfig c6(6, 3, 1);
  const auto t = truncated_momentum_state(c6, 1, 2);
  CHECK(std::abs(t.amplitudes.norm() - 1.0) < 1e-12);
  for (Index n = 0; n < 3; ++n) CHECK(t.amplitudes(n) == Complex(0.0));

  // sqrt(k_x) Pi_{X;nu} |P;m>
  const ComplexVector expected = std::sqrt(2.0) *
                                 (oracle::block_projector(6, false, 3, 3) * oracle::momentum_ket(6, 2));
  CHECK((t.amplitudes - expected).norm() < 1e-12);

  CHECK_THROWS_AS(truncated_momentum_state(c6, 2, 0), DomainError);
  CHECK_THROWS_AS(truncated_momentum_state(c6, 0, 6), DomainError);
}

TEST_CASE("dirichlet delta") {
  for (Index q = 1; q <= 9; ++q) CHECK(std::abs(dirichlet_delta(q, 0.0) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(dirichlet_delta(2, 1.0)) < 1e-15);
  CHECK(std::abs(dirichlet_delta(3, 3.0) - Complex(1.0)) < 1e-12);
  CHECK_THROWS_AS(dirichlet_delta(0, 0.5), DomainError);
}

TEST_CASE("dirichlet delta closed form agrees with its defining sum") {
  for (Index q = 1; q <= 12; ++q) {
    const double qd = static_cast<double>(q);
    for (int step = -14 * static_cast<int>(q); step <= 14 * static_cast<int>(q); ++step) {
      const double x = static_cast<double>(step) / 7.0;
      INFO("q=" << q << " x=" << x);
      CHECK(std::abs(dirichlet_delta(q, x) - oracle::dirichlet_sum(q, x)) < 1e-10);
    }
    // Near the removable singularity from both sides.
    for (double eps : {1e-7, 1e-10, 1e-13}) {
      for (double x : {qd + eps, qd - eps, -qd + eps, 2 * qd - eps}) {
        CHECK(std::abs(dirichlet_delta(q, x) - oracle::dirichlet_sum(q, x)) < 1e-10);
      }
    }
  }
}

TEST_CASE("truncated overlap examples") {
  const LatticeConfig c(4, 2, 1);
  CHECK(std::abs(truncated_overlap(c, 3, 3) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(truncated_overlap(c, 0, 2)) < 1e-15);
  CHECK(std::abs(std::norm(truncated_overlap(c, 0, 1)) - 0.5) < 1e-12);
  CHECK_THROWS_AS(truncated_overlap(c, 4, 0), DomainError);
}

TEST_CASE("truncated overlap equals the explicit inner product, d <= 24") {
  for (Index d = 1; d <= 24; ++d) {
    for (Index wx : divisors(d)) {
      const LatticeConfig c(d, wx, 1);
      std::vector<ComplexVector> states;
      for (Index m = 0; m < d; ++m) states.push_back(truncated_momentum_state(c, 0, m).amplitudes);
      for (Index m = 0; m < d; ++m) {
        for (Index mp = 0; mp < d; ++mp) {
          // <P_0;m'|P_0;m>
          const Complex direct = states[mp].dot(states[m]);
          CHECK(std::abs(truncated_overlap(c, m, mp) - direct) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("projector cache serves identical matrices to concurrent readers") {
  const LatticeConfig c(12, 3, 4);
  const ProjectorCache cache(c);
  std::vector<std::shared_ptr<const ComplexMatrix>> seen(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < seen.size(); ++t) {
      threads.emplace_back([&, t] { seen[t] = cache.get(Basis::momentum, 1); });
    }
  }
  for (const auto& p : seen) CHECK(p == seen.front());
  CHECK(max_abs_diff(*seen.front(), projector(c, Basis::momentum, 1).matrix()) == 0.0);
}
