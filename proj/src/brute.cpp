#include "qlattice/brute.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qlattice/errors.hpp"
#include "qlattice/parallel.hpp"
#include "qlattice/summation.hpp"
#include "qlattice/tolerances.hpp"

namespace qlattice {

namespace {

void check_cap(const LatticeConfig& config) {
  if (config.d() > kBruteCap) {
    throw ResourceError("brute-force evaluation limited to d <= " + std::to_string(kBruteCap) +
                        ", got d=" + std::to_string(config.d()));
  }
}

void check_dim(const LatticeConfig& config, const QuantumState& rho) {
  if (rho.dim() != config.d()) {
    throw DomainError("state dimension " + std::to_string(rho.dim()) +
                      " does not match d=" + std::to_string(config.d()));
  }
}

double clamp_probability(double p) {
  if (p >= 0.0) return p;
  if (p >= -tol::kNegativeClamp) return 0.0;
  throw NumericError("negative probability " + std::to_string(p));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::optional<double> AgreeResult::brute_residual() const {
  if (!brute) return std::nullopt;
  return std::abs(*brute - closed);
}

std::optional<double> AgreeResult::gram_residual() const {
  if (!gram) return std::nullopt;
  return std::abs(*gram - closed);
}

double AgreeResult::max_residual() const {
  double r = 0.0;
  if (brute) r = std::max(r, std::abs(*brute - closed));
  if (gram) r = std::max(r, std::abs(*gram - closed));
  if (brute && gram) r = std::max(r, std::abs(*brute - *gram));
  return r;
}

std::vector<SequenceOutcome> sequence_distribution(const LatticeConfig& config,
                                                   const QuantumState& rho) {
  check_dim(config, rho);
  check_cap(config);
  const Index kx = config.k_x();
  const Index kp = config.k_p();
  const Index wx = config.w_x();
  ProjectorCache cache(config);

  // Slot per (nu, mu) holding the k_x probabilities over nu2.
  std::vector<std::vector<double>> slots(static_cast<std::size_t>(kx * kp));

  if (rho.is_pure()) {
    const ComplexVector& psi = rho.amplitudes();
    parallel_for(slots.size(), [&](std::size_t slot) {
      const Index nu = static_cast<Index>(slot) / kp;
      const Index mu = static_cast<Index>(slot) % kp;
      ComplexVector after_x = ComplexVector::Zero(config.d());
      after_x.segment(nu * wx, wx) = psi.segment(nu * wx, wx);
      const ComplexVector after_p = *cache.get(Basis::momentum, mu) * after_x;
      auto& out = slots[slot];
      out.resize(static_cast<std::size_t>(kx));
      for (Index nu2 = 0; nu2 < kx; ++nu2) {
        out[static_cast<std::size_t>(nu2)] = after_p.segment(nu2 * wx, wx).squaredNorm();
      }
    });
  } else {
    const ComplexMatrix r = rho.density_matrix();
    parallel_for(slots.size(), [&](std::size_t slot) {
      const Index nu = static_cast<Index>(slot) / kp;
      const Index mu = static_cast<Index>(slot) % kp;
      const ComplexMatrix& px = *cache.get(Basis::position, nu);
      const ComplexMatrix& pp = *cache.get(Basis::momentum, mu);
      const ComplexMatrix after_x = px * r * px;
      const ComplexMatrix after_p = pp * after_x * pp;
      auto& out = slots[slot];
      out.resize(static_cast<std::size_t>(kx));
      for (Index nu2 = 0; nu2 < kx; ++nu2) {
        out[static_cast<std::size_t>(nu2)] =
            after_p.diagonal().segment(nu2 * wx, wx).sum().real();
      }
    });
  }

  std::vector<SequenceOutcome> result;
  result.reserve(static_cast<std::size_t>(kx * kp * kx));
  for (Index nu = 0; nu < kx; ++nu) {
    for (Index mu = 0; mu < kp; ++mu) {
      const auto& probs = slots[static_cast<std::size_t>(nu * kp + mu)];
      for (Index nu2 = 0; nu2 < kx; ++nu2) {
        result.push_back({nu, mu, nu2, clamp_probability(probs[static_cast<std::size_t>(nu2)])});
      }
    }
  }
  return result;
}

double sandwich_trace(const LatticeConfig& config, const QuantumState& rho, Index nu, Index mu) {
  check_dim(config, rho);
  check_cap(config);
  const ComplexMatrix px = projector(config, Basis::position, nu).matrix();
  const ComplexMatrix pp = projector(config, Basis::momentum, mu).matrix();
  const ComplexMatrix a = px * pp * px;
  return (a * a * rho.density_matrix()).trace().real();
}

double p_agree_state(const LatticeConfig& config, const QuantumState& rho) {
  CompensatedSum total;
  for (const auto& o : sequence_distribution(config, rho)) {
    if (o.nu == o.nu2) total += o.probability;
  }
  return total.value();
}

ComplexMatrix lambda_agree(const LatticeConfig& config) {
  check_cap(config);
  const Index d = config.d();
  const Index kx = config.k_x();
  const Index kp = config.k_p();
  const Index wx = config.w_x();
  ProjectorCache cache(config);

  // Pi_{X;nu} is a coordinate projector, so Pi_X Pi_P Pi_X is the (nu,nu)
  // diagonal block of Pi_P and Lambda is block diagonal.
  std::vector<ComplexMatrix> blocks(static_cast<std::size_t>(kx));
  parallel_for(blocks.size(), [&](std::size_t slot) {
    const Index nu = static_cast<Index>(slot);
    ComplexMatrix acc = ComplexMatrix::Zero(wx, wx);
    for (Index mu = 0; mu < kp; ++mu) {
      const ComplexMatrix b = cache.get(Basis::momentum, mu)->block(nu * wx, nu * wx, wx, wx);
      acc.noalias() += b * b;
    }
    blocks[slot] = std::move(acc);
  });

  ComplexMatrix lambda = ComplexMatrix::Zero(d, d);
  for (Index nu = 0; nu < kx; ++nu) {
    lambda.block(nu * wx, nu * wx, wx, wx) = blocks[static_cast<std::size_t>(nu)];
  }
  return lambda;
}

double p_agree_average_reduced(const LatticeConfig& config) {
  check_cap(config);
  const ComplexMatrix px = projector(config, Basis::position, 0).matrix();
  const ComplexMatrix pp = projector(config, Basis::momentum, 0).matrix();
  const ComplexMatrix a = px * pp * px;
  const double scale =
      static_cast<double>(config.k_x() * config.k_p()) / static_cast<double>(config.d());
  return scale * (a * a).trace().real();
}

double p_agree_average_brute(const LatticeConfig& config) {
  const double from_lambda =
      lambda_agree(config).trace().real() / static_cast<double>(config.d());
  const double reduced = p_agree_average_reduced(config);
  if (std::abs(from_lambda - reduced) > 1e-10) {
    throw NumericError("tr(Lambda)/d and the reduced trace disagree: " +
                       std::to_string(from_lambda) + " vs " + std::to_string(reduced));
  }
  return from_lambda;
}

double p_agree_average_gram(const LatticeConfig& config) {
  const Index wp = config.w_p();
  CompensatedSum sum;
  for (Index m = 0; m < wp; ++m) {
    for (Index mp = 0; mp < wp; ++mp) sum += std::norm(truncated_overlap(config, m, mp));
  }
  const double scale = static_cast<double>(config.k_p()) /
                       (static_cast<double>(config.d()) * static_cast<double>(config.k_x()));
  return scale * sum.value();
}

std::vector<QuantumState> sample_haar_states(const LatticeConfig& config, Index count,
                                             std::uint64_t seed) {
  if (count < 1) throw DomainError("sample count must be >= 1");
  const Index d = config.d();
  std::vector<QuantumState> states;
  states.reserve(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i) {
    std::mt19937_64 gen(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(i))));
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexVector v(d);
    for (Index n = 0; n < d; ++n) {
      const double re = normal(gen);
      const double im = normal(gen);
      v(n) = Complex(re, im);
    }
    v /= v.norm();
    states.push_back(QuantumState::pure(std::move(v)));
  }
  return states;
}

}  // namespace qlattice
