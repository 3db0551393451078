#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "qlattice/lattice.hpp"

namespace qlattice {

/// Projector onto one contiguous block of w basis states of the position or
/// momentum basis. Holds indices only; matrix() builds the d x d operator in
/// the position basis.
class CoarseProjector {
 public:
  /// Throws DomainError unless 0 <= interval < k for the chosen basis.
  CoarseProjector(const LatticeConfig& config, Basis basis, Index interval);

  [[nodiscard]] const LatticeConfig& config() const noexcept { return config_; }
  [[nodiscard]] Basis basis() const noexcept { return basis_; }
  [[nodiscard]] Index interval() const noexcept { return interval_; }
  [[nodiscard]] Index width() const noexcept { return config_.width(basis_); }
  /// First basis index covered by the block.
  [[nodiscard]] Index first() const noexcept { return interval_ * width(); }

  [[nodiscard]] ComplexMatrix matrix() const;

 private:
  LatticeConfig config_;
  Basis basis_;
  Index interval_;
};

[[nodiscard]] inline CoarseProjector projector(const LatticeConfig& config, Basis basis,
                                               Index interval) {
  return {config, basis, interval};
}

/// Materialized projectors for one lattice, built on first request and then
/// shared read-only. Safe for concurrent callers.
class ProjectorCache {
 public:
  explicit ProjectorCache(LatticeConfig config) : config_(config) {}

  [[nodiscard]] const LatticeConfig& config() const noexcept { return config_; }
  [[nodiscard]] std::shared_ptr<const ComplexMatrix> get(Basis basis, Index interval) const;

 private:
  LatticeConfig config_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::tuple<int, Index>, std::shared_ptr<const ComplexMatrix>> cache_;
};

/// X_cg = sum_nu nu * Pi_{X;nu} or P_cg = sum_mu mu * Pi_{P;mu}.
[[nodiscard]] ComplexMatrix coarse_observable(const LatticeConfig& config, Basis basis);

/// |P_nu;m> = sqrt(k_x) Pi_{X;nu} |P;m>: a momentum state cut to one position block.
struct TruncatedMomentumState {
  Index nu;
  Index m;
  LatticeConfig config;
  ComplexVector amplitudes;
};

[[nodiscard]] TruncatedMomentumState truncated_momentum_state(const LatticeConfig& config,
                                                              Index nu, Index m);

/// Delta_q(x) = (1/q) sum_{n<q} exp(i 2 pi x n / q), evaluated in closed form
/// away from x in qZ and by the defining sum near it.
[[nodiscard]] Complex dirichlet_delta(Index q, double x);

/// <P_0;m'|P_0;m> = Delta_{w_x}((m - m') / k_x).
[[nodiscard]] Complex truncated_overlap(const LatticeConfig& config, Index m, Index m_prime);

}  // namespace qlattice
