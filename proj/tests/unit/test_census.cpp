#include "doctest.h"

#include <cmath>
#include <map>

#include "galcensus/census.hpp"
#include "galcensus/errors.hpp"

using namespace galcensus;

namespace {

std::map<std::string, std::uint64_t> tally(const std::vector<CensusRecord>& recs, long long h) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& r : recs)
    if (r.H == h) out[r.label] = r.count;
  return out;
}

std::uint64_t pow_u(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("degree 1 and 2 boxes") {
  const auto one = census_full(1, {0, 3});
  CHECK(tally(one, 3) == std::map<std::string, std::uint64_t>{{"S1", 7}});
  CHECK(tally(one, 0) == std::map<std::string, std::uint64_t>{{"S1", 1}});
  const auto two = census_full(2, {1});
  CHECK(tally(two, 1) == std::map<std::string, std::uint64_t>{{"S2", 5}, {"reducible", 4}});
}

TEST_CASE("oracle fixtures for degrees 3 and 4") {
  const auto three = census_full(3, {5});
  CHECK(tally(three, 5) == std::map<std::string, std::uint64_t>{{"A3", 26}, {"S3", 976}, {"reducible", 329}});
  const auto four = census_full(4, {2});
  CHECK(tally(four, 2) == std::map<std::string, std::uint64_t>{
                              {"A4", 2}, {"C4", 2}, {"D4", 70}, {"S4", 274}, {"V4", 6}, {"reducible", 271}});
}

TEST_CASE("conservation, nesting and partition independence") {
  const std::vector<long long> hs{1, 2, 3, 4};
  const auto base = census_full(3, hs);
  for (long long h : hs) {
    std::uint64_t sum = 0;
    for (const auto& [k, v] : tally(base, h)) sum += v;
    CHECK(sum == pow_u(static_cast<std::uint64_t>(2 * h + 1), 3));
  }
  for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
    auto lo = tally(base, hs[i]), hi = tally(base, hs[i + 1]);
    for (const auto& [k, v] : lo) CHECK(v <= hi[k]);
  }
  for (int shards : {4, 16}) {
    CensusOptions opt;
    opt.shards = shards;
    opt.jobs = 3;
    CHECK(census_full(3, hs, opt) == base);
  }
  CHECK(census_csv(census_full(3, hs)) == census_csv(base));
}

TEST_CASE("work ceiling") {
  CensusOptions opt;
  opt.work_ceiling = 1000;
  CHECK_THROWS_AS(census_full(3, {5}, opt), CeilingExceeded);
  try {
    census_full(3, {5}, opt);
  } catch (const CeilingExceeded& e) {
    CHECK(e.required() == 1331);
  }
  CHECK_THROWS_AS(census_full(11, {1}), UnsupportedError);
}

TEST_CASE("trinomial census") {
  const auto t = census_trinomial(10, 1, {1});
  std::uint64_t sum = 0;
  for (const auto& r : t) sum += r.count;
  CHECK(sum == 9);
  CHECK_NOTHROW(census_trinomial(9, 2, {1}));
  CHECK_THROWS_AS(census_trinomial(10, 2, {1}), PreconditionError);
  CHECK_THROWS_AS(census_trinomial(10, 10, {1}), PreconditionError);
  try {
    census_trinomial(10, 2, {1});
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("gcd") != std::string::npos);
  }
}

TEST_CASE("trinomial labels") {
  using namespace trinomial_label;
  CHECK(classify_trinomial(10, 3, 0, 0, 200).first == integer_zero);
  CHECK(classify_trinomial(10, 3, -2, 1, 200).first == integer_zero);  // X = 1
  CHECK(classify_trinomial(10, 1, 0, 1, 200).first == reducible_no_linear);  // X^10 + 1
  CHECK(classify_trinomial(10, 9, -1, -1, 200).first == certified_Sn);  // X^10 - X - 1
  const auto [label, cert] = classify_trinomial(5, 1, 0, -2, 200);   // X^5 - 2: F20
  CHECK(label == other);
  CHECK(cert == Certainty::exact);
}

TEST_CASE("exponent fits") {
  std::vector<std::pair<double, double>> cube;
  for (double h : {10.0, 20.0, 40.0, 80.0}) cube.emplace_back(h, std::pow(2 * h + 1, 3));
  CHECK(fit_exponent(cube).slope == doctest::Approx(3).epsilon(0.05 / 3));
  const auto flat = fit_exponent(std::vector<std::pair<double, double>>{{5, 7}, {10, 7}, {20, 7}});
  CHECK(std::abs(flat.slope) < 1e-12);
  const auto exact = fit_exponent(std::vector<std::pair<double, double>>{{1, 1}, {2, 4}, {4, 16}});
  CHECK(exact.slope == doctest::Approx(2));
  CHECK(exact.tail_slope == doctest::Approx(2));
  CHECK(exact.residual < 1e-12);
  CHECK_THROWS_AS(fit_exponent(std::vector<std::pair<double, double>>{{1, 1}, {2, 4}}), InsufficientData);
  CHECK_THROWS_AS(fit_exponent(std::vector<std::pair<double, double>>{{1, 1}, {2, 0}, {4, 16}}), InsufficientData);
  CHECK_THROWS_AS(fit_exponent(std::vector<std::pair<double, double>>{{2, 1}, {1, 4}, {4, 16}}), InvalidInput);
}

TEST_CASE("compare report references") {
  ExponentFit f;
  f.slope = 2.4;
  const auto rows = compare_report({{"A3", f}, {"non_Sn", f}, {"reducible", f}}, 3, 0.2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].bound == doctest::Approx(2.5));
  CHECK(rows[0].pass);
  CHECK(rows[1].bound == doctest::Approx(2.5));
  CHECK(rows[2].bound == doctest::Approx(2));
  CHECK_FALSE(rows[2].pass);
  CHECK(rows[0].margin == doctest::Approx(0.1));
  const auto d4 = compare_report({{"D4", f}}, 4, 0.3);
  CHECK(d4[0].bound == doctest::Approx(3 + 1.0 / 3));
  const auto n10 = compare_report({{"non_Sn_An", f}}, 10, 0.2);
  CHECK(n10[0].bound == doctest::Approx(9 + 1.0 / 126));
  const auto tri = compare_report_trinomial({{"not_certified_Sn", f}}, 10, 0.3);
  CHECK(tri[0].bound == doctest::Approx(1.1));
  CHECK_FALSE(compare_text(rows).empty());
}

TEST_CASE("series helpers and csv") {
  const auto recs = census_full(2, {1, 2});
  const auto s = series(recs, "S2");
  REQUIRE(s.size() == 2);
  CHECK(s[0].second == 5);
  const auto c = complement_series(recs, {"S2"});
  CHECK(c[0].second == 4);
  const std::string csv = census_csv(recs);
  CHECK(csv.rfind("n,H,label,count,total,certainty_floor\n", 0) == 0);
  CHECK(csv.find("2,1,S2,5,9,exact\n") != std::string::npos);
}
