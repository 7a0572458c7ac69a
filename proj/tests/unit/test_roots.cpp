#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "galcensus/errors.hpp"
#include "galcensus/roots.hpp"

using namespace galcensus;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

std::complex<double> cd(const Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

// Distance from each true root in `expected` to the nearest approximation.
double max_match_distance(const RootSet& rs, const std::vector<std::complex<double>>& expected) {
  double worst = 0;
  for (const auto& e : expected) {
    double best = INFINITY;
    for (const auto& z : rs.roots) best = std::min(best, std::abs(cd(z) - e));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

TEST_CASE("root bound fixtures") {
  CHECK(root_bound(P("1,0,0,0")) == 0);
  CHECK(root_bound(P("1,-2,1")) == doctest::Approx(1 / (std::sqrt(2.0) - 1)).epsilon(1e-12));
  CHECK(root_bound(P("1,-2,1")) >= 1 / (std::sqrt(2.0) - 1));
  CHECK(root_bound(P("1,-6,11,-6")) == doctest::Approx(2 / (std::cbrt(2.0) - 1)).epsilon(1e-12));
  CHECK(root_bound(P("1,-6,11,-6")) >= 3);
  CHECK_THROWS_AS(root_bound(P("0")), InvalidInput);
}

TEST_CASE("complex roots fixtures") {
  const RootSet a = complex_roots(P("1,0,1"), 1e-12L);
  REQUIRE(a.roots.size() == 2);
  CHECK(a.error_radius <= 1e-12L);
  CHECK(max_match_distance(a, {{0, 1}, {0, -1}}) < 1e-12);

  const RootSet b = complex_roots(P("1,0,0,-1"), 1e-12L);
  REQUIRE(b.roots.size() == 3);
  std::complex<double> sum = 0;
  for (const auto& z : b.roots) {
    CHECK(std::abs(cd(z)) == doctest::Approx(1.0).epsilon(1e-12));
    sum += cd(z);
  }
  CHECK(std::abs(sum) < 1e-11);

  IntPolynomial f = P("1");
  for (int k = 1; k <= 6; ++k) f = f * IntPolynomial::monic_from_tail({-k});
  const RootSet c = complex_roots(f, 1e-10L);
  REQUIRE(c.roots.size() == 6);
  CHECK(max_match_distance(c, {1, 2, 3, 4, 5, 6}) < 1e-10);
}

TEST_CASE("multiple roots are returned with multiplicity") {
  const RootSet rs = complex_roots(P("1,3,0,-4"), 1e-15L);  // (X-1)(X+2)^2
  REQUIRE(rs.roots.size() == 3);
  int near_minus2 = 0;
  for (const auto& z : rs.roots) near_minus2 += std::abs(cd(z) - std::complex<double>(-2, 0)) < 1e-12;
  CHECK(near_minus2 == 2);
}

TEST_CASE("Vieta consistency and modulus bound on random inputs") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> d(-10, 10);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<long long> tail;
    for (int i = 0; i < n; ++i) tail.push_back(d(rng));
    const IntPolynomial f = IntPolynomial::monic_from_tail(tail);
    const RootSet rs = complex_roots(f, 1e-20L);
    REQUIRE(static_cast<int>(rs.roots.size()) == n);
    const double bound = root_bound(f);
    std::complex<double> sum = 0, prod = 1;
    for (const auto& z : rs.roots) {
      CHECK(std::abs(cd(z)) <= bound + static_cast<double>(rs.error_radius) + 1e-12);
      sum += cd(z);
      prod *= cd(z);
    }
    const double tol = 1e-9 * std::pow(1 + bound, n);
    CHECK(std::abs(sum + static_cast<double>(tail[0])) <= tol);
    CHECK(std::abs(prod - std::pow(-1.0, n) * static_cast<double>(tail.back())) <= tol);
  }
}

TEST_CASE("more precision never loosens the certificate") {
  for (const char* s : {"1,0,-3,1", "1,1,-7,2,9", "1,0,0,0,-1,-1", "1,-5,5,3"}) {
    const IntPolynomial f = P(s);
    const RootSet lo = complex_roots(f, 1e-30L, {128, 4096});
    const RootSet hi = complex_roots(f, 1e-30L, {256, 4096});
    CHECK(hi.precision_bits >= lo.precision_bits);
    CHECK(hi.error_radius <= lo.error_radius);
  }
}

TEST_CASE("deterministic output") {
  const RootSet a = complex_roots(P("1,2,-3,4,-5"), 1e-25L);
  const RootSet b = complex_roots(P("1,2,-3,4,-5"), 1e-25L);
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    CHECK(a.roots[i].re.to_string(40) == b.roots[i].re.to_string(40));
    CHECK(a.roots[i].im.to_string(40) == b.roots[i].im.to_string(40));
  }
}
