#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "galcensus/bigint.hpp"
#include "galcensus/census.hpp"
#include "galcensus/perm.hpp"

namespace galcensus {

struct Monomial {
  int e1 = 0;  // exponent of x1
  int e2 = 0;  // exponent of x2
  BigInt c;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// F(x1, x2) as a list of monomials with distinct exponent pairs and nonzero
/// coefficients, sorted by (e1, e2).
class PlaneCurve {
 public:
  PlaneCurve() = default;
  static PlaneCurve from_monomials(std::vector<Monomial> monomials);
  /// "e1,e2,c;e1,e2,c;..."
  static PlaneCurve parse(std::string_view text);

  const std::vector<Monomial>& monomials() const { return m_; }
  int degree() const;  // total degree, -1 for the zero curve
  int degree_x1() const;
  bool is_zero() const { return m_.empty(); }
  BigInt evaluate(const BigInt& x1, const BigInt& x2) const;
  std::string to_string() const;

 private:
  std::vector<Monomial> m_;
};

inline constexpr std::uint64_t kDefaultRowCeiling = 10'000'000;

struct PointCount {
  std::uint64_t count = 0;
  std::vector<long long> zero_rows;  // x2 values where F(., x2) vanishes identically
};

/// Exact N(F; P1, P2) = #{(x1, x2) in Z^2 : F = 0, |x1| <= P1, |x2| <= P2}.
PointCount count_integer_points(const PlaneCurve& f, long long p1, long long p2,
                                std::uint64_t row_ceiling = kDefaultRowCeiling, int jobs = 1);

/// max over monomials of P1^e1 * P2^e2.
BigInt monomial_T(const PlaneCurve& f, long long p1, long long p2);

struct BoundRatio {
  std::uint64_t n = 0;
  double rhs = 0;  // max(P1,P2)^eps * exp(log P1 log P2 / log T)
  double ratio = 0;
  BigInt t;
};
BoundRatio bound_ratio(const PlaneCurve& f, long long p1, long long p2, double eps = 0.1);

struct CurveRow {
  int prefix_id = 0;
  long long H = 0;
  long long p1 = 0;
  long long p2 = 0;
  std::uint64_t n = 0;
  BigInt t;
  double slope = 0;
};

struct PrefixResult {
  int prefix_id = 0;
  std::vector<long long> prefix;
  bool generic = false;
  long long witness_t = 0;
  PlaneCurve curve;  // Phi(z, a_n) with x1 = z, x2 = a_n
  std::vector<std::uint64_t> counts;  // per height
  std::vector<long long> p1;          // per height
  ExponentFit fit;
  bool shifted = false;         // fit used N + 1 because some N was 0
  bool curve_consistent = true;  // bivariate count equals the row-by-row count
  bool points_verified = true;   // every point satisfies Phi = 0 exactly
  std::uint64_t zero_rows = 0;
};

struct CurveExperiment {
  int n = 0;
  std::string group;
  std::uint64_t m = 0;
  double alpha = 1;  // fitted growth of P1 in H, clamped to >= 1
  std::vector<long long> heights;
  std::vector<PrefixResult> prefixes;  // generic prefixes only
  std::vector<CurveRow> rows;
  std::vector<std::string> notices;  // skipped prefixes
};

struct ExperimentOptions {
  int sample_budget = 20;  // specializations tried by generic_group_check
  std::size_t max_prefixes = 0;  // stop after this many generic prefixes (0 = all)
  int jobs = 1;
};

/// Deterministic pseudo-random prefixes (a_1..a_{n-1}) with |a_i| <= bound.
std::vector<std::vector<long long>> sample_prefixes(int n, std::size_t count, long long bound, std::uint64_t seed);

CurveExperiment resolvent_curve_experiment(int n, const PermGroup& g, const std::vector<std::vector<long long>>& prefixes,
                                           const std::vector<long long>& heights, const ExperimentOptions& options = {});

/// prefix_id,H,N,T,slope
std::string experiment_csv(const CurveExperiment& e);
nlohmann::json to_json(const CurveExperiment& e);

}  // namespace galcensus
