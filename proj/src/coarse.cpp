#include "qlattice/coarse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qlattice/errors.hpp"
#include "qlattice/tolerances.hpp"

namespace qlattice {

namespace {

void check_range(Index value, Index upper, const char* what) {
  if (value < 0 || value >= upper) {
    throw DomainError(std::string(what) + "=" + std::to_string(value) + " outside [0, " +
                      std::to_string(upper) + ")");
  }
}

// sin(pi * (k + r / q)) for x = k q + r with integer k and |r| <= q/2; the
// subtraction is exact, so the result keeps full relative accuracy near zeros.
double sin_pi_over(double x, double q) {
  const double k = std::nearbyint(x / q);
  const double r = x - k * q;
  const double s = std::sin(std::numbers::pi * (r / q));
  return std::fmod(k, 2.0) == 0.0 ? s : -s;
}

}  // namespace

CoarseProjector::CoarseProjector(const LatticeConfig& config, Basis basis, Index interval)
    : config_(config), basis_(basis), interval_(interval) {
  check_range(interval, config.intervals(basis), "interval");
}

ComplexMatrix CoarseProjector::matrix() const {
  const Index d = config_.d();
  const Index w = width();
  if (basis_ == Basis::position) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (Index n = first(); n < first() + w; ++n) p(n, n) = 1.0;
    return p;
  }
  // F restricted to the block's columns, times its adjoint.
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix cols(d, w);
  for (Index j = 0; j < w; ++j) {
    for (Index n = 0; n < d; ++n) cols(n, j) = unit_phase(first() + j, n, d) * scale;
  }
  return cols * cols.adjoint();
}

std::shared_ptr<const ComplexMatrix> ProjectorCache::get(Basis basis, Index interval) const {
  const auto key = std::make_tuple(static_cast<int>(basis), interval);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto built = std::make_shared<const ComplexMatrix>(projector(config_, basis, interval).matrix());
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.emplace(key, std::move(built));
  return it->second;
}

ComplexMatrix coarse_observable(const LatticeConfig& config, Basis basis) {
  const Index d = config.d();
  ComplexMatrix obs = ComplexMatrix::Zero(d, d);
  for (Index i = 1; i < config.intervals(basis); ++i) {
    obs += static_cast<double>(i) * projector(config, basis, i).matrix();
  }
  return obs;
}

TruncatedMomentumState truncated_momentum_state(const LatticeConfig& config, Index nu, Index m) {
  check_range(nu, config.k_x(), "nu");
  check_range(m, config.d(), "m");
  const Index d = config.d();
  const Index w = config.w_x();
  const double scale = 1.0 / std::sqrt(static_cast<double>(w));
  ComplexVector amp = ComplexVector::Zero(d);
  for (Index n = nu * w; n < (nu + 1) * w; ++n) amp(n) = unit_phase(m, n, d) * scale;
  return {nu, m, config, std::move(amp)};
}

Complex dirichlet_delta(Index q, double x) {
  if (q < 1) throw DomainError("dirichlet_delta requires q >= 1");
  const double pi = std::numbers::pi;
  const double qd = static_cast<double>(q);
  const double denom = sin_pi_over(x, qd);
  if (std::abs(denom) < tol::kDirichletSingular) {
    Complex sum = 0.0;
    for (Index n = 0; n < q; ++n) sum += std::polar(1.0, 2.0 * pi * x * static_cast<double>(n) / qd);
    return sum / qd;
  }
  return std::polar(1.0, pi * (x - x / qd)) * (sin_pi_over(x, 1.0) / (qd * denom));
}

Complex truncated_overlap(const LatticeConfig& config, Index m, Index m_prime) {
  check_range(m, config.d(), "m");
  check_range(m_prime, config.d(), "m_prime");
  const double x = static_cast<double>(m - m_prime) / static_cast<double>(config.k_x());
  return dirichlet_delta(config.w_x(), x);
}

}  // namespace qlattice
