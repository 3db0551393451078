#include "qlattice/polygamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qlattice/errors.hpp"
#include "qlattice/summation.hpp"

namespace qlattice {

namespace {

constexpr double kAsymptoticStart = 12.0;

// B_2, B_4, ..., B_14.
constexpr std::array<double, 7> kBernoulli = {
    1.0 / 6.0,   -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0};

void check_positive(double x, const char* name) {
  if (!(x > 0.0)) {
    throw DomainError(std::string(name) + " requires x > 0, got " + std::to_string(x));
  }
}

}  // namespace

double digamma(double x) {
  check_positive(x, "digamma");
  double shift = 0.0;
  while (x <= kAsymptoticStart) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double pow = inv2;
  double series = 0.0;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    series += kBernoulli[k] / (2.0 * static_cast<double>(k + 1)) * pow;
    pow *= inv2;
  }
  return shift + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
  check_positive(x, "trigamma");
  double shift = 0.0;
  while (x <= kAsymptoticStart) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double pow = inv2 * inv;
  double series = 0.0;
  for (double b : kBernoulli) {
    series += b * pow;
    pow *= inv2;
  }
  return shift + inv + 0.5 * inv2 + series;
}

HarmonicResiduals harmonic_sum_identities(long g, double x) {
  if (g < 2) throw DomainError("harmonic_sum_identities requires g >= 2");
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("harmonic_sum_identities requires 0 < x < 1");
  }
  constexpr double pi = std::numbers::pi;
  CompensatedSum s1;
  CompensatedSum s2;
  for (long l = 1; l < g; ++l) {
    const double t = 1.0 / (static_cast<double>(l) - x);
    s1 += t;
    s2 += t * t;
  }
  const double gx = static_cast<double>(g) - x;
  const double s = std::sin(pi * x);
  const double rhs1 = digamma(gx) - digamma(x) - pi * std::cos(pi * x) / s;
  const double rhs2 = -trigamma(gx) - trigamma(x) + pi * pi / (s * s);
  return {std::abs(s1.value() - rhs1), std::abs(s2.value() - rhs2)};
}

}  // namespace qlattice
