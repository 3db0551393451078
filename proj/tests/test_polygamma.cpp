#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qlattice/errors.hpp"
#include "qlattice/polygamma.hpp"

using namespace qlattice;

namespace {
constexpr double kEuler = 0.57721566490153286061;
}

TEST_CASE("standard values") {
  CHECK(std::abs(digamma(1.0) + kEuler) < 1e-14);
  CHECK(std::abs(trigamma(1.0) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-14);
  CHECK(std::abs(digamma(0.5) + kEuler + 2.0 * std::log(2.0)) < 1e-14);
  CHECK(std::abs(trigamma(0.5) - std::numbers::pi * std::numbers::pi / 2.0) < 1e-13);
}

TEST_CASE("non-positive arguments are rejected") {
  CHECK_THROWS_AS(digamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(-1.5), DomainError);
  CHECK_THROWS_AS(trigamma(0.0), DomainError);
  CHECK_THROWS_AS(digamma(std::nan("")), DomainError);
}

TEST_CASE("accuracy against GSL on [1e-3, 1e6]") {
  for (int i = 0; i <= 900; ++i) {
    const double x = std::pow(10.0, -3.0 + 9.0 * i / 900.0);
    const double ref0 = oracle::gsl_digamma(x);
    const double ref1 = oracle::gsl_trigamma(x);
    INFO("x = " << x);
    // Relative, except near the zero of psi at x ~ 1.4616 where it is absolute.
    CHECK(std::abs(digamma(x) - ref0) <= 1e-10 * std::max(std::abs(ref0), 1.0));
    CHECK(std::abs(trigamma(x) - ref1) <= 1e-10 * std::abs(ref1));
  }
}

TEST_CASE("digamma sits between ln x - 1/x and ln x - 1/(2x)") {
  for (double x : {0.5, 1.0, 2.0, 10.0, 100.0}) {
    const double psi = digamma(x);
    CHECK(std::log(x) - 1.0 / x < psi);
    CHECK(psi < std::log(x) - 0.5 / x);
  }
}

TEST_CASE("recurrence relations") {
  for (int i = 1; i <= 1000; ++i) {
    const double x = 0.1 * i;
    const double step0 = digamma(1.0 + x) - digamma(x);
    const double step1 = trigamma(1.0 + x) - trigamma(x);
    CHECK(std::abs(step0 - 1.0 / x) <= 1e-10 * (1.0 / x));
    CHECK(std::abs(step1 + 1.0 / (x * x)) <= 1e-10 * (1.0 / (x * x)));
  }
}

TEST_CASE("harmonic sum identities") {
  const auto a = harmonic_sum_identities(2, 0.5);
  CHECK(a.first < 1e-9);
  CHECK(a.second < 1e-9);
  const auto b = harmonic_sum_identities(5, 0.25);
  CHECK(b.first < 1e-9);
  CHECK(b.second < 1e-9);
  const auto c = harmonic_sum_identities(100, 0.9);
  CHECK(c.first < 1e-8);
  CHECK(c.second < 1e-8);

  std::mt19937_64 gen(8);
  std::uniform_int_distribution<long> g(2, 200);
  std::uniform_real_distribution<double> x(0.001, 0.999);
  for (int i = 0; i < 200; ++i) {
    const auto r = harmonic_sum_identities(g(gen), x(gen));
    CHECK(r.first < 1e-8);
    CHECK(r.second < 1e-8);
  }

  CHECK_THROWS_AS(harmonic_sum_identities(1, 0.5), DomainError);
  CHECK_THROWS_AS(harmonic_sum_identities(3, 1.0), DomainError);
  CHECK_THROWS_AS(harmonic_sum_identities(3, 0.0), DomainError);
}
