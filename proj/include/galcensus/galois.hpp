#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galcensus/perm.hpp"
#include "galcensus/poly.hpp"

namespace galcensus {

enum class LabelKind { reducible, exact_group, contained_in_An, certified_Sn, indeterminate };
/// Ordered from strongest to weakest.
enum class Certainty { exact = 0, certified = 1, budget_limited = 2 };

std::string to_string(LabelKind k);
std::string to_string(Certainty c);

/// One step of the evidence chain behind a label.
struct Evidence {
  std::string kind;    // factorization, discriminant, cycle_type, resolvent, witness
  std::string detail;  // human-readable value
  std::uint32_t prime = 0;  // for cycle types and witnesses
};

struct GaloisLabel {
  LabelKind kind = LabelKind::indeterminate;
  std::string group;        // catalog name for exact_group
  FactorPattern pattern;    // for reducible
  Certainty certainty = Certainty::budget_limited;
  std::optional<bool> disc_square;
  std::vector<Evidence> evidence;

  /// Collapsed census key: "reducible", a catalog name, "contained_in_An",
  /// "certified_Sn" or "indeterminate".
  std::string key() const;
};

/// Factor degrees of f mod p (the Frobenius cycle type), or nullopt when p
/// divides disc(f). Throws InvalidInput when p is not prime.
std::optional<CycleType> cycle_type_mod_p(const IntPolynomial& f, std::uint64_t p);

inline constexpr int kDefaultPrimeBudget = 200;

GaloisLabel identify(const IntPolynomial& f, int prime_budget = kDefaultPrimeBudget);

struct SnCertificate {
  bool certified = false;
  std::optional<std::uint32_t> n_cycle;      // prime giving an n-cycle
  std::optional<std::uint32_t> n1_cycle;     // prime giving an (n-1)-cycle
  std::optional<std::uint32_t> jordan;       // prime giving a Jordan prime-cycle type
  std::optional<std::uint32_t> transposition;  // prime giving one 2-cycle, other parts odd
  std::optional<std::uint32_t> odd_type;     // prime giving an odd cycle type
  bool disc_nonsquare = false;
  int primes_used = 0;
};

/// Sound, incomplete certificate that Gal(f) = S_n. disc_square may be
/// supplied when already known; otherwise it is computed only if the cycle
/// types do not settle parity.
SnCertificate certify_Sn(const IntPolynomial& f, int prime_budget = kDefaultPrimeBudget,
                         std::optional<bool> disc_square = std::nullopt);

nlohmann::json to_json(const GaloisLabel& label);
nlohmann::json to_json(const SnCertificate& cert);

}  // namespace galcensus
