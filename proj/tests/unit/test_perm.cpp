#include "doctest.h"

#include <algorithm>
#include <set>

#include "galcensus/errors.hpp"
#include "galcensus/perm.hpp"

using namespace galcensus;

namespace {

Permutation C(const char* s, int n) { return Permutation::parse_cycles(s, n); }

std::uint64_t fact(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * fact(n - 1); }

bool tiles_Sn(const CosetSystem& cs) {
  const int n = cs.group.degree();
  std::set<std::uint64_t> seen;
  for (const auto& s : cs.representatives)
    for (const auto& t : cs.group.elements())
      if (!seen.insert((s * t).code()).second) return false;
  return seen.size() == fact(n);
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p = C("(1 2 3)", 3);
  CHECK(p.images() == std::vector<int>{2, 3, 1});
  CHECK(p.to_cycles() == "(1 2 3)");
  CHECK(Permutation::identity(4).to_cycles() == "()");
  CHECK((p * p * p).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK(C("(1 2)(3 4 5)", 5).cycle_type() == CycleType{2, 3});
  CHECK(C("(1 2)", 3).sign() == -1);
  CHECK(C("(1,2,3)", 3) == p);
  // (a * b)(i) = a(b(i))
  const Permutation a = C("(1 2)", 3), b = C("(2 3)", 3);
  CHECK((a * b)(1) == a(b(1)));
  CHECK((a * b).to_cycles() == "(1 2 3)");
  CHECK_THROWS_AS(C("(1 1)", 3), InvalidInput);
  CHECK_THROWS_AS(C("(1 4)", 3), InvalidInput);
}

TEST_CASE("closure fixtures") {
  CHECK(closure(3, {C("(1 2 3)", 3)}).order() == 3);
  CHECK(closure(3, {C("(1 2)", 3), C("(1 2 3)", 3)}).order() == 6);
  CHECK(closure(4, {C("(1 2 3 4)", 4), C("(1 3)", 4)}).order() == 8);
  CHECK(closure(6, {C("(1 2)", 6), C("(1 2 3 4 5 6)", 6)}).is_symmetric());
  CHECK(closure(7, {C("(1 2 3)", 7), C("(1 2 3 4 5 6 7)", 7)}).is_alternating());
  CHECK_THROWS_AS(closure(11, {}), UnsupportedError);
}

TEST_CASE("index and delta") {
  for (int n = 1; n <= 10; ++n) {
    const IndexDelta s = index_and_delta(PermGroup::symmetric(n));
    CHECK(s.index == 1);
    CHECK(s.delta == 1);
  }
  const IndexDelta a3 = index_and_delta(PermGroup::alternating(3));
  CHECK(a3.index == 2);
  CHECK(a3.delta == mpq_class(1, 2));
  const IndexDelta d4 = index_and_delta(parse_group("(1 2 3 4);(1 3)", 4));
  CHECK(d4.index == 3);
  CHECK(d4.delta == mpq_class(1, 3));
  CHECK(index_and_delta(PermGroup::alternating(10)).index == 2);
}

TEST_CASE("coset representatives") {
  const CosetSystem a4 = left_coset_reps(PermGroup::alternating(4));
  REQUIRE(a4.representatives.size() == 2);
  CHECK(a4.representatives[0].is_identity());
  CHECK(a4.representatives[1] == C("(1 2)", 4));

  const CosetSystem triv = left_coset_reps(closure(3, {}));
  CHECK(triv.representatives.size() == 6);

  const CosetSystem d4 = left_coset_reps(parse_group("(1 2 3 4);(1 3)", 4));
  CHECK(d4.representatives.size() == 3);
  CHECK(d4.representatives[0].is_identity());
  CHECK(tiles_Sn(d4));

  CHECK(left_coset_reps(PermGroup::symmetric(10)).representatives.size() == 1);
  CHECK(left_coset_reps(PermGroup::alternating(10)).representatives.size() == 2);
}

TEST_CASE("cosets tile S_n for every subgroup of S_4 and sampled degree-6 groups") {
  for (const auto& g : enumerate_subgroups(4)) {
    const CosetSystem cs = left_coset_reps(g);
    CHECK(cs.representatives.size() * g.order() == 24);
    CHECK(tiles_Sn(cs));
    // each representative is the least element of its coset
    for (const auto& s : cs.representatives)
      for (const auto& t : g.elements()) CHECK_FALSE(s * t < s);
  }
  for (const char* gens : {"(1 2 3 4 5 6)", "(1 2 3)(4 5 6);(1 4)(2 5)(3 6)", "(1 2);(3 4);(5 6)",
                           "(1 2 3 4 5 6);(1 6)(2 5)(3 4)"}) {
    const PermGroup g = parse_group(gens, 6);
    CHECK(tiles_Sn(left_coset_reps(g)));
  }
}

TEST_CASE("transitivity and fixed points") {
  const PermGroup c3 = parse_group("(1 2 3)", 3);
  CHECK(is_transitive(c3));
  CHECK(fixed_points(c3).empty());
  const PermGroup t = parse_group("(1 2)", 3);
  CHECK_FALSE(is_transitive(t));
  CHECK(fixed_points(t) == std::vector<int>{3});
  CHECK(is_transitive(parse_group("(1 2 3 4);(1 3)", 4)));
  CHECK(is_transitive(PermGroup::alternating(10)));
}

TEST_CASE("e(n)") {
  CHECK(e_n(9) == mpq_class(1, 63));
  CHECK(e_n(10) == mpq_class(1, 126));
  for (int n = 9; n <= 20; ++n) CHECK(e_n(n + 2) < e_n(n));
  CHECK_THROWS_AS(e_n(8), InvalidInput);
}

TEST_CASE("subgroup lattices") {
  CHECK(enumerate_subgroups(3).size() == 6);
  CHECK(enumerate_subgroups(4).size() == 30);
  CHECK(enumerate_subgroups(5).size() == 156);
  CHECK_THROWS_AS(enumerate_subgroups(6), UnsupportedError);

  const auto r3 = min_transitive_index_report(3);
  REQUIRE(r3.transitive_classes.size() == 2);
  CHECK(r3.transitive_classes[0].name == "A3");
  CHECK(r3.transitive_classes[1].name == "S3");
  CHECK_FALSE(r3.min_index.has_value());

  const auto r4 = min_transitive_index_report(4);
  std::vector<std::uint64_t> orders;
  int literal = 0;
  for (const auto& c : r4.transitive_classes) {
    orders.push_back(c.order);
    literal += c.conjugates;
  }
  CHECK(orders == std::vector<std::uint64_t>{4, 4, 8, 12, 24});
  CHECK(literal == 9);
  CHECK(r4.min_index == 3u);

  const auto r5 = min_transitive_index_report(5);
  std::vector<std::uint64_t> o5;
  for (const auto& c : r5.transitive_classes) o5.push_back(c.order);
  CHECK(o5 == std::vector<std::uint64_t>{5, 10, 20, 60, 120});
  CHECK(r5.min_index == 6u);
}

TEST_CASE("lattice invariants") {
  for (int n = 3; n <= 5; ++n) {
    const auto subs = enumerate_subgroups(n);
    for (const auto& g : subs) {
      CHECK(fact(n) % g.order() == 0);
      CHECK(closure(n, g.generators()).order() == g.order());
      // point stabilizer containment for intransitive groups with a fixed point
      if (!g.is_alternating() && !g.is_symmetric() && !fixed_points(g).empty())
        CHECK(index_and_delta(g).index >= static_cast<std::uint64_t>(n));
    }
  }
}

TEST_CASE("catalog agrees with the enumerated lattice") {
  for (int n = 3; n <= 5; ++n) {
    const auto subs = enumerate_subgroups(n);
    for (const auto& cg : catalog(n)) {
      CHECK(is_transitive(cg.group));
      CHECK(std::any_of(subs.begin(), subs.end(),
                        [&](const PermGroup& s) { return s.elements() == cg.group.elements(); }));
      bool even = true;
      std::set<CycleType> types;
      for (const auto& p : cg.group.elements()) {
        even &= p.sign() == 1;
        types.insert(p.cycle_type());
      }
      CHECK(even == cg.in_alternating);
      CHECK(std::vector<CycleType>(types.begin(), types.end()) == cg.cycle_types);
    }
  }
  CHECK(catalog_group(4, "D4").group.order() == 8);
  CHECK(catalog_group(5, "F20").group.order() == 20);
  CHECK(catalog_group(3, "C3").name == "A3");
}

TEST_CASE("parse_group") {
  CHECK(parse_group("S10", 10).is_symmetric());
  CHECK(parse_group("An", 9).is_alternating());
  CHECK(parse_group("V4", 4).order() == 4);
  CHECK(parse_group("()", 3).order() == 1);
  CHECK_THROWS_AS(parse_group("Q8", 4), InvalidInput);
}
