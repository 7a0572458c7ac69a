#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "galcensus/errors.hpp"
#include "galcensus/perm.hpp"
#include "galcensus/poly.hpp"
#include "galcensus/roots.hpp"

namespace galcensus {

/// Phi(z) = prod over left cosets sigma G of (z - R_sigma), rounded to Z.
struct Resolvent {
  PermGroup group;
  int degree = 0;
  IntPolynomial coefficients;
  double rounding_margin = 0;  // max distance of a raw coefficient from its integer
  double error_bound = 0;      // propagated a priori error of the raw coefficients
  int precision_bits = 0;
  bool degenerate = false;  // Phi has a repeated root
};

/// Raised when no precision up to the ceiling certifies the rounding.
class UncertifiedResolvent : public Error {
 public:
  UncertifiedResolvent(const std::string& what, std::vector<std::string> raw, double margin)
      : Error(what), raw_(std::move(raw)), margin_(margin) {}
  const std::vector<std::string>& raw_coefficients() const { return raw_; }
  double margin() const { return margin_; }

 private:
  std::vector<std::string> raw_;
  double margin_;
};

struct ResolventOptions {
  int initial_bits = 128;
  int max_bits = 4096;
  /// Optional relabelling of the roots: root i is taken from position
  /// root_order[i] of the computed RootSet (0-based). Empty keeps the order.
  std::vector<int> root_order;
};

/// R_sigma = sum_{tau in G} prod_{i=1..n} alpha_{sigma(tau(i))}^i, evaluated at
/// the RootSet's precision.
Complex invariant_value(const Permutation& sigma, const PermGroup& g, const RootSet& roots);

Resolvent galois_resolvent(const IntPolynomial& f, const PermGroup& g, const ResolventOptions& options = {});
/// Same, over caller-supplied coset representatives (any choice per coset).
Resolvent galois_resolvent(const IntPolynomial& f, const CosetSystem& cosets, const ResolventOptions& options = {});

std::vector<BigInt> integer_root_test(const Resolvent& phi);

enum class Genericity { certified_generic_Sn, inconclusive };

struct GenericCheck {
  Genericity outcome = Genericity::inconclusive;
  long long witness_t = 0;  // specialization that certified irreducibility
  int samples_tried = 0;
};

/// Builds Phi for X^n + a_1 X^{n-1} + ... + a_{n-1} X + t0 with
/// t0 = 1, -1, 2, -2, ... and sieves Phi for irreducibility modulo primes.
GenericCheck generic_group_check(int n, const std::vector<long long>& prefix, const PermGroup& g,
                                 int sample_budget = 20);

nlohmann::json to_json(const Resolvent& phi);

}  // namespace galcensus
