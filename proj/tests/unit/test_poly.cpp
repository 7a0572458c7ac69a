#include "doctest.h"

#include <random>

#include "galcensus/errors.hpp"
#include "galcensus/modp.hpp"
#include "galcensus/poly.hpp"

using namespace galcensus;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

IntPolynomial from_roots(const std::vector<long long>& roots) {
  IntPolynomial f = P("1");
  for (long long r : roots) f = f * IntPolynomial::monic_from_tail({-r});
  return f;
}

IntPolynomial random_monic(std::mt19937_64& rng, int n, long long h) {
  std::uniform_int_distribution<long long> d(-h, h);
  std::vector<long long> tail;
  for (int i = 0; i < n; ++i) tail.push_back(d(rng));
  return IntPolynomial::monic_from_tail(tail);
}

}  // namespace

TEST_CASE("text format round trip") {
  const IntPolynomial f = P("1,0,-3,1");
  CHECK(f.degree() == 3);
  CHECK(f.coeff(1) == -3);
  CHECK(f.to_string() == "1,0,-3,1");
  CHECK(f.pretty() == "X^3 - 3*X + 1");
  CHECK(P(" 2, -1 ").to_string() == "2,-1");
  CHECK(P("0,0,5").degree() == 0);
  CHECK_THROWS_AS(P("1,,2"), InvalidInput);
  CHECK_THROWS_AS(P("1,x"), InvalidInput);
  CHECK(IntPolynomial::monic_from_tail({0, -3, 1}) == f);
}

TEST_CASE("arithmetic") {
  const IntPolynomial a = P("1,-1");
  const IntPolynomial b = P("1,1");
  CHECK((a * b) == P("1,0,-1"));
  CHECK((a + b) == P("2,0"));
  CHECK((a - a).is_zero());
  CHECK(evaluate(P("1,0,-3,1"), BigInt(2)) == 3);
  CHECK(derivative(P("1,0,-3,1")) == P("3,0,-3"));
  CHECK(content(P("6,4,2")) == 2);
  CHECK(primitive_part(P("-6,4,2")) == P("3,-2,-1"));
  CHECK(divide_exact(P("1,0,-1"), a) == b);
  CHECK_FALSE(divide_exact(P("1,0,1"), a).has_value());
  CHECK(gcd(P("1,0,-1"), P("1,-2,1")) == a);
}

TEST_CASE("discriminant fixtures") {
  CHECK(discriminant(P("1,1,1")) == -3);
  CHECK(discriminant(P("1,0,-1,0")) == 4);
  CHECK(discriminant(P("1,0,0,1,1")) == 229);
  CHECK(discriminant(P("1,0,0,0,1")) == 256);
  CHECK(discriminant(P("1,0,-3,1")) == 81);
  CHECK(discriminant(P("1,0,0,-2")) == -108);
  CHECK(discriminant(P("1,-2,1")) == 0);
}

TEST_CASE("resultant and discriminant identities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const IntPolynomial f = random_monic(rng, 1 + trial % 3, 6);
    const IntPolynomial g = random_monic(rng, 1 + trial % 4, 6);
    const BigInt r = resultant(f, g);
    CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * r * r);
    if (f.degree() == 1) CHECK(resultant(f, g) == evaluate(g, BigInt(-f.coeff(0))));
  }
}

TEST_CASE("is_square_integer") {
  CHECK(is_square_integer(BigInt(81)) == BigInt(9));
  CHECK(is_square_integer(BigInt(0)) == BigInt(0));
  CHECK_FALSE(is_square_integer(BigInt(-4)).has_value());
  CHECK_FALSE(is_square_integer(BigInt(229)).has_value());
  const BigInt big = BigInt("123456789012345678901234567890");
  CHECK(is_square_integer(big * big) == big);
  CHECK_FALSE(is_square_integer(big * big + 1).has_value());
}

TEST_CASE("integer roots") {
  CHECK(integer_roots(from_roots({1, 2, -3})) == std::vector<BigInt>{-3, 1, 2});
  CHECK(integer_roots(from_roots({0, 0, 5})) == std::vector<BigInt>{0, 5});
  CHECK(integer_roots(P("1,0,1")).empty());
  CHECK(integer_roots(P("2,-1")).empty());
  CHECK(integer_roots(P("1,-1000000007")) == std::vector<BigInt>{1000000007});
}

TEST_CASE("integer root routes agree") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> d(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> roots{d(rng), d(rng)};
    const IntPolynomial g = from_roots(roots) * random_monic(rng, 1 + trial % 3, 30);
    for (auto& [h, m] : squarefree_decomposition(primitive_part(g))) {
      (void)m;
      if (sgn(h.coeff(0)) == 0) continue;
      const auto a = detail::integer_roots_by_divisors(h, abs(h.coeff(0)));
      const auto b = detail::integer_roots_by_lifting(h);
      CHECK(a == b);
    }
  }
}

TEST_CASE("squarefree decomposition") {
  const IntPolynomial f = from_roots({1, 1, -2, -2, -2, 3});
  const auto sq = squarefree_decomposition(f);
  IntPolynomial back = P("1");
  for (const auto& [g, m] : sq)
    for (int i = 0; i < m; ++i) back = back * g;
  CHECK(back == f);
  REQUIRE(sq.size() == 3);
}

TEST_CASE("factorization fixtures") {
  const Factorization f4 = factorize(P("1,0,0,0,4"));
  REQUIRE(f4.factors.size() == 2);
  CHECK(f4.factors[0].first * f4.factors[1].first == P("1,0,0,0,4"));
  CHECK(f4.pattern() == FactorPattern{{2, 2}, false});

  const IntPolynomial x10 = P("1,0,0,0,0,0,0,0,0,0,1");
  const Factorization f10 = factorize(x10);
  CHECK(f10.pattern() == FactorPattern{{2, 8}, false});
  CHECK(f10.expand() == x10);
  bool has_octic = false;
  for (const auto& [g, m] : f10.factors) has_octic |= g == P("1,0,-1,0,1,0,-1,0,1");
  CHECK(has_octic);

  CHECK(factor_pattern(P("1,0,-3,1")).is_irreducible());
  CHECK(factor_pattern(P("1,0,0,0,0,0,0,0,0,-1,-1")).is_irreducible());
  CHECK(factor_pattern(from_roots({2, 2, 5})) == FactorPattern{{1, 1, 1}, true});
}

TEST_CASE("factorization of constructed products") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const IntPolynomial a = random_monic(rng, 2 + trial % 3, 5);
    const IntPolynomial b = random_monic(rng, 2 + trial % 2, 5);
    const IntPolynomial f = a * b;
    const Factorization fz = factorize(f);
    CHECK(fz.expand() == f);
    int total = 0;
    for (const auto& [g, m] : fz.factors) {
      CHECK(factor_pattern(g).is_irreducible());
      total += g.degree() * m;
    }
    CHECK(total == f.degree());
    CHECK_FALSE(fz.pattern().is_irreducible());
  }
}

TEST_CASE("finite field arithmetic") {
  CHECK(modp::nth_prime(0) == 2);
  CHECK(modp::nth_prime(199) == 1223);
  CHECK(modp::is_prime(1000000007));
  CHECK_FALSE(modp::is_prime(1));
  CHECK_FALSE(modp::is_prime(561));
  CHECK(modp::factor_degrees(P("1,0,1"), 5) == std::vector<int>{1, 1});
  CHECK(modp::factor_degrees(P("1,0,1"), 3) == std::vector<int>{2});
  CHECK_FALSE(modp::factor_degrees(P("1,0,1"), 2).has_value());
  CHECK(modp::roots(modp::reduce(P("1,0,1"), 5), 5) == std::vector<std::uint32_t>{2, 3});
  // X^p - X splits completely into linear factors over F_p.
  CHECK(modp::factor_degrees(P("1,0,0,0,0,0,-1,0"), 7) == std::vector<int>(7, 1));
}

TEST_CASE("mod p degrees sum to n and refine over Z factors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPolynomial f = random_monic(rng, 5, 10);
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
      const auto d = modp::factor_degrees(f, p);
      if (!d) continue;
      int sum = 0;
      for (int x : *d) sum += x;
      CHECK(sum == 5);
      CHECK(d->size() >= factor_pattern(f).degrees.size());
    }
  }
}
