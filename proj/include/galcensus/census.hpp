#pragma once

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galcensus/galois.hpp"

namespace galcensus {

struct CensusRecord {
  int n = 0;
  long long H = 0;
  std::string label;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  Certainty certainty_floor = Certainty::exact;  // weakest certainty among the counted polynomials

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

inline constexpr std::uint64_t kDefaultWorkCeiling = 100'000'000;

struct CensusOptions {
  int prime_budget = kDefaultPrimeBudget;
  std::uint64_t work_ceiling = kDefaultWorkCeiling;
  int shards = 1;  // disjoint index ranges, merged by addition
  int jobs = 1;    // worker threads
};

/// All X^n + a_1 X^{n-1} + ... + a_n with |a_i| <= H, for each H in the list.
/// Records are sorted by (H, label).
std::vector<CensusRecord> census_full(int n, const std::vector<long long>& heights, const CensusOptions& options = {});

/// Trinomial case labels.
namespace trinomial_label {
inline constexpr const char* integer_zero = "integer_zero";
inline constexpr const char* reducible_no_linear = "reducible_no_linear";
inline constexpr const char* disc_square = "disc_square";
inline constexpr const char* certified_Sn = "certified_Sn";
inline constexpr const char* other = "other";
inline constexpr const char* indeterminate = "indeterminate";
}  // namespace trinomial_label

/// Label of X^n + a X^{n-r} + b under the trinomial case split.
std::pair<std::string, Certainty> classify_trinomial(int n, int r, long long a, long long b, int prime_budget);

/// X^n + a_r X^{n-r} + a_n with |a_r|, |a_n| <= H. Requires gcd(r, n) = 1.
std::vector<CensusRecord> census_trinomial(int n, int r, const std::vector<long long>& heights,
                                           const CensusOptions& options = {});

std::string census_csv(const std::vector<CensusRecord>& records);
/// Counts for one label across heights (missing heights count 0).
std::vector<std::pair<long long, std::uint64_t>> series(const std::vector<CensusRecord>& records,
                                                        const std::string& label);
/// total - sum of the listed labels, per height.
std::vector<std::pair<long long, std::uint64_t>> complement_series(const std::vector<CensusRecord>& records,
                                                                   const std::vector<std::string>& excluded);

struct ExponentFit {
  std::vector<std::pair<double, double>> points;  // (H, count)
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // root mean square residual in log space
  double tail_slope = 0;
};

/// Least squares of log count against log H. Needs >= 3 points with positive
/// counts and strictly increasing H (zero counts are dropped first).
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& points);
ExponentFit fit_exponent(const std::vector<std::pair<long long, std::uint64_t>>& points);

struct CompareRow {
  std::string label;
  std::string reference;  // which bound the row compares against
  double slope = 0;
  double bound = 0;
  double margin = 0;  // bound - slope
  bool pass = false;
  std::string note;
};

struct CompareInput {
  std::string label;
  ExponentFit fit;
};

/// Rows for census_full at degree n. Labels may be catalog names,
/// "reducible", "non_Sn" (aggregate) or "non_Sn_An" (aggregate, n >= 9).
std::vector<CompareRow> compare_report(const std::vector<CompareInput>& fits, int n, double tolerance = 0.2);
/// Rows for a trinomial census: "not_certified_Sn" and "integer_zero" against 1 + 1/n.
std::vector<CompareRow> compare_report_trinomial(const std::vector<CompareInput>& fits, int n,
                                                 double tolerance = 0.2);

std::string compare_text(const std::vector<CompareRow>& rows);
nlohmann::json to_json(const ExponentFit& fit);
nlohmann::json to_json(const CompareRow& row);

}  // namespace galcensus
