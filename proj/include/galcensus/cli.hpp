#pragma once

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "galcensus/census.hpp"

namespace galcensus {

inline constexpr const char* kVersion = "0.1.0";
/// Environment variable naming the default output directory.
inline constexpr const char* kOutEnv = "GALCENSUS_OUT";

struct RunConfig {
  std::string command;  // galois, resolvent, census-full, census-trinomial, curve-count, curve-experiment, fit, subgroups

  std::string poly;   // galois, resolvent: "1,0,-3,1"
  std::string group;  // resolvent, curve-experiment: cycles, "Sn"/"An" or a catalog name
  int n = 3;
  int r = 1;
  std::vector<long long> heights;
  int budget = kDefaultPrimeBudget;
  std::uint64_t ceiling = kDefaultWorkCeiling;
  int shards = 1;
  int jobs = 1;

  std::string curve;  // curve-count: "e1,e2,c;..."
  long long p1 = 1;
  long long p2 = 1;
  double eps = 0.1;

  std::vector<std::vector<long long>> prefixes;  // curve-experiment; empty -> sampled
  int prefix_count = 20;
  long long prefix_bound = 10;
  std::uint64_t seed = 1;
  int sample_budget = 20;

  std::vector<std::pair<double, double>> points;  // fit
  double tolerance = 0.2;

  std::string out_dir;  // empty -> $GALCENSUS_OUT, then "."
  std::string version = kVersion;

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
  /// Throws InvalidInput naming the first out-of-range parameter.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Executes one command. Returns 0 on success, 2 on precondition or input
/// errors, 3 on ceiling refusals, 1 on any other failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace galcensus
