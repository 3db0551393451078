#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qlattice/coarse.hpp"
#include "qlattice/lattice.hpp"

namespace qlattice {

/// Largest d for which d x d operators are materialized.
inline constexpr Index kBruteCap = 256;

/// Joint probability of the position-momentum-position outcome triple.
struct SequenceOutcome {
  Index nu;
  Index mu;
  Index nu2;
  double probability;
};

/// One evaluation of <p_agree> for a configuration, by every requested route.
struct AgreeResult {
  explicit AgreeResult(const LatticeConfig& c) : config(c) {}

  LatticeConfig config;
  std::optional<double> brute;
  std::optional<double> gram;
  double closed = 0.0;
  std::optional<double> continuum;
  std::optional<double> perturbation;
  std::optional<double> upper_bound;
  std::optional<double> lower_bound;

  /// |brute - closed| when both are present.
  [[nodiscard]] std::optional<double> brute_residual() const;
  /// |gram - closed| when both are present.
  [[nodiscard]] std::optional<double> gram_residual() const;
  /// Largest residual between the exact routes (brute, gram, closed); 0 if only one ran.
  [[nodiscard]] double max_residual() const;
};

/// Full Lueders-chain distribution over (nu, mu, nu2), sorted by indices.
/// Intermediate states are carried unnormalized, so a zero-probability branch
/// simply contributes zeros. Throws DomainError on dimension mismatch and
/// NumericError if a probability falls below -1e-12.
[[nodiscard]] std::vector<SequenceOutcome> sequence_distribution(const LatticeConfig& config,
                                                                 const QuantumState& rho);

/// tr[(Pi_{X;nu} Pi_{P;mu} Pi_{X;nu})^2 rho] evaluated as a single trace.
[[nodiscard]] double sandwich_trace(const LatticeConfig& config, const QuantumState& rho,
                                    Index nu, Index mu);

/// Probability that both position outcomes agree.
[[nodiscard]] double p_agree_state(const LatticeConfig& config, const QuantumState& rho);

/// Lambda_agree = sum_{nu,mu} (Pi_{X;nu} Pi_{P;mu} Pi_{X;nu})^2. Throws
/// ResourceError when d > kBruteCap.
[[nodiscard]] ComplexMatrix lambda_agree(const LatticeConfig& config);

/// tr(Lambda_agree) / d. Cross-checked against p_agree_average_reduced; a
/// disagreement above 1e-10 raises NumericError.
[[nodiscard]] double p_agree_average_brute(const LatticeConfig& config);

/// (k_x k_p / d) tr[(Pi_{X;0} Pi_{P;0} Pi_{X;0})^2], the translation-reduced trace.
[[nodiscard]] double p_agree_average_reduced(const LatticeConfig& config);

/// (1/d)(k_p/k_x) sum_{m,m' < w_p} |<P_0;m'|P_0;m>|^2. O(w_p^2); no matrices.
[[nodiscard]] double p_agree_average_gram(const LatticeConfig& config);

/// Name of the generator used by sample_haar_states, for output metadata.
inline constexpr std::string_view kHaarGenerator =
    "mt19937_64 per state, seeded by splitmix64(seed, index); std::normal_distribution";

/// count pure states, each d i.i.d. complex standard normals normalized.
/// State i depends only on (seed, i).
[[nodiscard]] std::vector<QuantumState> sample_haar_states(const LatticeConfig& config,
                                                           Index count, std::uint64_t seed);

}  // namespace qlattice
