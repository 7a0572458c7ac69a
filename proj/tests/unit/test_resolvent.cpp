#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "galcensus/galois.hpp"
#include "galcensus/resolvent.hpp"

using namespace galcensus;

namespace {

IntPolynomial P(const char* s) { return IntPolynomial::parse(s); }

PermGroup trivial(int n) { return closure(n, {}); }

}  // namespace

TEST_CASE("invariant values for n = 2, G = {id}") {
  const RootSet rs = complex_roots(P("1,-3,2"), 1e-30L);
  // complex_roots may return the roots in either order; R_id uses alpha_1 alpha_2^2.
  const Complex id = invariant_value(Permutation::identity(2), trivial(2), rs);
  const Complex sw = invariant_value(Permutation::parse_cycles("(1 2)", 2), trivial(2), rs);
  const double a1 = rs.roots[0].re.to_double(), a2 = rs.roots[1].re.to_double();
  CHECK(id.re.to_double() == doctest::Approx(a1 * a2 * a2));
  CHECK(sw.re.to_double() == doctest::Approx(a2 * a1 * a1));
  std::vector<double> vals{id.re.to_double(), sw.re.to_double()};
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == doctest::Approx(2));
  CHECK(vals[1] == doctest::Approx(4));

  const RootSet ri = complex_roots(P("1,0,1"), 1e-30L);
  const Complex v = invariant_value(Permutation::identity(2), trivial(2), ri);
  const Complex w = invariant_value(Permutation::parse_cycles("(1 2)", 2), trivial(2), ri);
  CHECK(std::abs(v.re.to_double()) < 1e-25);
  CHECK(std::abs(v.im.to_double() + w.im.to_double()) < 1e-25);
  CHECK(std::abs(std::abs(v.im.to_double()) - 1) < 1e-25);
}

TEST_CASE("left coset well-definedness of invariant values") {
  const RootSet rs = complex_roots(P("1,2,-1,5"), 1e-40L);
  const PermGroup a3 = PermGroup::alternating(3);
  const Permutation s = Permutation::parse_cycles("(1 2)", 3);
  const Complex base = invariant_value(s, a3, rs);
  for (const auto& t : a3.elements()) {
    const Complex other = invariant_value(s * t, a3, rs);
    CHECK(std::abs((other.re - base.re).to_double()) < 1e-30);
    CHECK(std::abs((other.im - base.im).to_double()) < 1e-30);
  }
}

TEST_CASE("resolvent fixtures") {
  const Resolvent a = galois_resolvent(P("1,-3,2"), trivial(2));
  CHECK(a.coefficients == P("1,-6,8"));
  CHECK(a.degree == 2);
  CHECK(a.rounding_margin < 0.25);
  CHECK(integer_root_test(a) == std::vector<BigInt>{2, 4});

  const Resolvent b = galois_resolvent(P("1,0,1"), trivial(2));
  CHECK(b.coefficients == P("1,0,1"));
  CHECK(integer_root_test(b).empty());

  const Resolvent c = galois_resolvent(P("1,0,-3,1"), PermGroup::alternating(3));
  CHECK(c.coefficients == P("1,3,-18"));
  CHECK(integer_root_test(c) == std::vector<BigInt>{-6, 3});
}

TEST_CASE("closed form for n = 2, G = {id}") {
  for (long long a1 = -6; a1 <= 6; ++a1)
    for (long long a2 = -6; a2 <= 6; ++a2) {
      if (a1 * a1 - 4 * a2 == 0) continue;
      const Resolvent r = galois_resolvent(IntPolynomial::monic_from_tail({a1, a2}), trivial(2));
      CHECK(r.coefficients == IntPolynomial::monic_from_tail({a1 * a2, a2 * a2 * a2}));
    }
}

TEST_CASE("the S_n resolvent is linear with an integer root") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long long> d(-5, 5);
  for (int n = 1; n <= 6; ++n) {
    std::vector<long long> tail;
    for (int i = 0; i < n; ++i) tail.push_back(d(rng));
    const Resolvent r = galois_resolvent(IntPolynomial::monic_from_tail(tail), PermGroup::symmetric(n));
    CHECK(r.degree == 1);
    CHECK(integer_root_test(r) == std::vector<BigInt>{-r.coefficients.coeff(0)});
  }
}

TEST_CASE("alternating resolvent at degree 10") {
  // X^10 - X - 1 has group S_10: the quadratic A_10 resolvent has no integer root.
  const Resolvent r = galois_resolvent(P("1,0,0,0,0,0,0,0,0,-1,-1"), PermGroup::alternating(10));
  CHECK(r.degree == 2);
  CHECK(r.rounding_margin < 0.25);
  CHECK(integer_root_test(r).empty());
}

TEST_CASE("root order and representative independence") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> d(-6, 6);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 3;
    std::vector<long long> tail;
    for (int i = 0; i < n; ++i) tail.push_back(d(rng));
    const IntPolynomial f = IntPolynomial::monic_from_tail(tail);
    for (const auto& cg : catalog(n)) {
      const Resolvent base = galois_resolvent(f, cg.group);
      CHECK(base.rounding_margin < 0.25);
      ResolventOptions opt;
      opt.root_order.resize(static_cast<std::size_t>(n));
      std::iota(opt.root_order.begin(), opt.root_order.end(), 0);
      std::shuffle(opt.root_order.begin(), opt.root_order.end(), rng);
      CHECK(galois_resolvent(f, cg.group, opt).coefficients == base.coefficients);

      CosetSystem cs = left_coset_reps(cg.group);
      const auto& el = cs.group.elements();
      std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
      for (auto& s : cs.representatives) s = s * el[pick(rng)];
      std::shuffle(cs.representatives.begin(), cs.representatives.end(), rng);
      CHECK(galois_resolvent(f, cs).coefficients == base.coefficients);
    }
  }
}

TEST_CASE("degenerate resolvents are flagged") {
  // X^4 + 1: the V4 resolvent has a repeated integer root.
  const Resolvent r = galois_resolvent(P("1,0,0,0,1"), catalog_group(4, "V4").group);
  CHECK(r.degenerate);
  CHECK_FALSE(integer_root_test(r).empty());
  CHECK_FALSE(galois_resolvent(P("1,0,-3,1"), PermGroup::alternating(3)).degenerate);
}

TEST_CASE("integer roots respect the root bound") {
  const Resolvent r = galois_resolvent(P("1,0,-7,6"), trivial(3));
  for (const auto& z : integer_root_test(r)) CHECK(std::abs(to_long_double(z)) <= root_bound(r.coefficients));
  CHECK(integer_root_test(r).size() == 6);
}

TEST_CASE("genericity check") {
  const GenericCheck c = generic_group_check(3, {0, 0}, PermGroup::alternating(3));
  CHECK(c.outcome == Genericity::certified_generic_Sn);
  CHECK(c.samples_tried >= 1);
  const GenericCheck s = generic_group_check(4, {1, 2, 3}, PermGroup::symmetric(4));
  CHECK(s.outcome == Genericity::certified_generic_Sn);
  const GenericCheck d = generic_group_check(4, {1, 2, 3}, catalog_group(4, "D4").group);
  // X^4 + X^2 + t is biquadratic, so its group over Q(t) lies in D4
  CHECK(generic_group_check(4, {0, 1, 0}, catalog_group(4, "D4").group).outcome == Genericity::inconclusive);
  CHECK(d.outcome == Genericity::certified_generic_Sn);
}

TEST_CASE("json dump") {
  const auto j = to_json(galois_resolvent(P("1,-3,2"), trivial(2)));
  CHECK(j["degree"] == 2);
  CHECK(j["coefficients"] == nlohmann::json::array({"1", "-6", "8"}));
  CHECK(j.contains("margin"));
  CHECK(j.contains("precision_bits"));
  CHECK(j.contains("group"));
}
