#include "galcensus/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "galcensus/errors.hpp"
#include "galcensus/modp.hpp"
#include "galcensus/resolvent.hpp"

namespace galcensus {

std::string to_string(LabelKind k) {
  switch (k) {
    case LabelKind::reducible:
      return "reducible";
    case LabelKind::exact_group:
      return "exact_group";
    case LabelKind::contained_in_An:
      return "contained_in_An";
    case LabelKind::certified_Sn:
      return "certified_Sn";
    default:
      return "indeterminate";
  }
}

std::string to_string(Certainty c) {
  switch (c) {
    case Certainty::exact:
      return "exact";
    case Certainty::certified:
      return "certified";
    default:
      return "budget_limited";
  }
}

std::string GaloisLabel::key() const {
  if (kind == LabelKind::exact_group) return group;
  return to_string(kind);
}

namespace {

std::string type_text(const CycleType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string pattern_text(const FactorPattern& p) { return type_text(p.degrees); }

bool is_prime_int(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Iterates unramified primes in increasing order.
class PrimeWalk {
 public:
  explicit PrimeWalk(const IntPolynomial& f) : f_(f) {}
  // Returns false when the scan window is exhausted.
  bool next(std::uint32_t& p, CycleType& type) {
    while (index_ < kWindow) {
      p = modp::nth_prime(index_++);
      auto degs = modp::factor_degrees(f_, p);
      if (degs) {
        type = std::move(*degs);
        return true;
      }
    }
    return false;
  }

 private:
  static constexpr std::size_t kWindow = 100000;
  const IntPolynomial& f_;
  std::size_t index_ = 0;
};

}  // namespace

std::optional<CycleType> cycle_type_mod_p(const IntPolynomial& f, std::uint64_t p) {
  if (!modp::is_prime(p)) throw InvalidInput("cycle_type_mod_p: " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 31)) throw UnsupportedError("cycle_type_mod_p supports p < 2^31");
  if (!f.is_monic()) throw InvalidInput("cycle_type_mod_p expects a monic polynomial");
  return modp::factor_degrees(f, static_cast<std::uint32_t>(p));
}

SnCertificate certify_Sn(const IntPolynomial& f, int prime_budget, std::optional<bool> disc_square) {
  const int n = f.degree();
  SnCertificate c;
  if (n <= 1) {
    c.certified = n == 1;
    return c;
  }
  if (n > 10) throw UnsupportedError("certify_Sn supports n <= 10");
  if (disc_square) c.disc_nonsquare = !*disc_square;
  bool disc_checked = disc_square.has_value();
  auto settle = [&] {
    const bool primitive = c.n_cycle && (n == 2 || c.n1_cycle);
    if (!primitive) return false;
    if (n == 2 || c.transposition) return true;
    if (!c.jordan) return false;
    if (c.odd_type || c.disc_nonsquare) return true;
    if (!disc_checked) {
      disc_checked = true;
      c.disc_nonsquare = !is_square_integer(discriminant(f)).has_value();
    }
    return c.disc_nonsquare;
  };
  PrimeWalk walk(f);
  std::uint32_t p = 0;
  CycleType t;
  while (c.primes_used < prime_budget && walk.next(p, t)) {
    ++c.primes_used;
    if (t.size() == 1 && !c.n_cycle) c.n_cycle = p;
    if (t.size() == 2 && t[0] == 1 && !c.n1_cycle) c.n1_cycle = p;
    if (!c.jordan) {
      for (int q : t)
        if (2 * q > n && q <= n - 3 && is_prime_int(q)) c.jordan = p;
    }
    if (!c.transposition) {
      int twos = 0;
      bool others_odd = true;
      for (int q : t) {
        if (q == 2)
          ++twos;
        else if (q % 2 == 0)
          others_odd = false;
      }
      if (twos == 1 && others_odd) c.transposition = p;
    }
    if (!c.odd_type && is_odd_cycle_type(t)) c.odd_type = p;
    if (settle()) {
      c.certified = true;
      return c;
    }
  }
  return c;
}

GaloisLabel identify(const IntPolynomial& f, int prime_budget) {
  const int n = f.degree();
  if (n < 1) throw InvalidInput("identify needs degree >= 1");
  if (n > 10) throw UnsupportedError("identify supports n <= 10");
  if (!f.is_monic()) throw InvalidInput("identify expects a monic polynomial");
  GaloisLabel label;
  if (n == 1) {
    label.kind = LabelKind::exact_group;
    label.group = "S1";
    label.certainty = Certainty::exact;
    return label;
  }

  const Factorization fac = factorize(f);
  const FactorPattern pat = fac.pattern();
  {
    std::string detail = pattern_text(pat);
    label.evidence.push_back({"factorization", detail, 0});
  }
  if (!pat.is_irreducible()) {
    label.kind = LabelKind::reducible;
    label.pattern = pat;
    label.certainty = Certainty::exact;
    return label;
  }

  const BigInt disc = discriminant(f);
  const bool square = is_square_integer(disc).has_value();
  label.disc_square = square;
  label.evidence.push_back({"discriminant", to_string(disc) + (square ? " square" : " nonsquare"), 0});

  if (n == 2) {
    label.kind = LabelKind::exact_group;
    label.group = "S2";
    label.certainty = Certainty::exact;
    return label;
  }

  if (n >= 6) {
    SnCertificate cert = certify_Sn(f, prime_budget, square);
    auto add = [&](const char* what, const std::optional<std::uint32_t>& p) {
      if (p) label.evidence.push_back({"witness", what, *p});
    };
    add("n_cycle", cert.n_cycle);
    add("n_minus_1_cycle", cert.n1_cycle);
    add("jordan_prime_cycle", cert.jordan);
    add("transposition_power", cert.transposition);
    add("odd_cycle_type", cert.odd_type);
    if (cert.certified) {
      label.kind = LabelKind::certified_Sn;
      label.certainty = Certainty::certified;
    } else if (square) {
      label.kind = LabelKind::contained_in_An;
      label.certainty = Certainty::exact;
    } else {
      label.kind = LabelKind::indeterminate;
      label.certainty = Certainty::budget_limited;
    }
    return label;
  }

  // n in 3..5: catalog candidates consistent with parity and observed types.
  std::vector<const CatalogGroup*> cands;
  for (const auto& g : catalog(n))
    if (g.in_alternating == square) cands.push_back(&g);
  // A resolvent integer root that is a simple root proves Gal lies in a
  // conjugate of the candidate; no integer root at all refutes it.
  enum class Verdict { confirmed, refuted, inconclusive };
  std::map<std::string, Verdict> verdicts;
  auto test_candidate = [&](const CatalogGroup& g) {
    if (auto it = verdicts.find(g.name); it != verdicts.end()) return it->second;
    Verdict v = Verdict::inconclusive;
    try {
      Resolvent phi = galois_resolvent(f, g.group);
      const auto roots = integer_root_test(phi);
      std::string detail = g.name + (roots.empty() ? " no integer root" : " integer roots");
      if (roots.empty()) {
        v = Verdict::refuted;
      } else {
        const IntPolynomial dphi = derivative(phi.coefficients);
        for (const auto& z : roots) {
          detail += " " + to_string(z);
          if (sgn(evaluate(dphi, z)) != 0) {
            v = Verdict::confirmed;
          } else {
            detail += "(repeated)";
          }
        }
      }
      if (phi.degenerate) detail += " degenerate";
      label.evidence.push_back({"resolvent", detail, 0});
    } catch (const UncertifiedResolvent&) {
      label.evidence.push_back({"resolvent", g.name + " uncertified", 0});
    }
    verdicts[g.name] = v;
    return v;
  };

  PrimeWalk walk(f);
  std::uint32_t p = 0;
  CycleType t;
  std::set<CycleType> seen;
  for (int used = 0; cands.size() > 1 && used < prime_budget && walk.next(p, t);) {
    ++used;
    if (seen.insert(t).second) {
      label.evidence.push_back({"cycle_type", type_text(t), p});
      std::erase_if(cands, [&](const CatalogGroup* g) {
        return !std::binary_search(g->cycle_types.begin(), g->cycle_types.end(), t);
      });
    }
    // Checkpoints: a confirmed minimal candidate cannot be displaced by
    // further primes, so the scan may stop early.
    if (cands.size() > 1 && (used == 12 || used == 48)) {
      const Verdict v = test_candidate(*cands.front());
      if (v == Verdict::confirmed) break;
      if (v == Verdict::refuted) cands.erase(cands.begin());
    }
  }
  // catalog order is by group order, so the front is the minimal candidate
  while (!cands.empty()) {
    const CatalogGroup* g = cands.front();
    label.kind = LabelKind::exact_group;
    label.group = g->name;
    if (index_and_delta(g->group).index == 1) {
      label.certainty = Certainty::exact;
      return label;
    }
    const Verdict v = test_candidate(*g);
    if (v == Verdict::confirmed) {
      label.certainty = Certainty::exact;
      return label;
    }
    if (v == Verdict::inconclusive) {
      label.certainty = Certainty::budget_limited;
      return label;
    }
    cands.erase(cands.begin());
  }
  label.kind = LabelKind::indeterminate;
  label.group.clear();
  label.certainty = Certainty::budget_limited;
  return label;
}

nlohmann::json to_json(const GaloisLabel& label) {
  nlohmann::json j;
  j["kind"] = to_string(label.kind);
  j["key"] = label.key();
  if (!label.group.empty()) j["group"] = label.group;
  if (label.kind == LabelKind::reducible) {
    j["pattern"] = label.pattern.degrees;
    j["has_linear"] = label.pattern.has_linear;
  }
  j["certainty"] = to_string(label.certainty);
  if (label.disc_square) j["disc_square"] = *label.disc_square;
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : label.evidence) {
    nlohmann::json a{{"kind", e.kind}, {"detail", e.detail}};
    if (e.prime) a["prime"] = e.prime;
    ev.push_back(a);
  }
  j["evidence"] = ev;
  return j;
}

nlohmann::json to_json(const SnCertificate& c) {
  nlohmann::json j;
  j["certified"] = c.certified;
  auto put = [&](const char* k, const std::optional<std::uint32_t>& p) {
    j[k] = p ? nlohmann::json(*p) : nlohmann::json(nullptr);
  };
  put("n_cycle", c.n_cycle);
  put("n_minus_1_cycle", c.n1_cycle);
  put("jordan_prime_cycle", c.jordan);
  put("transposition_power", c.transposition);
  put("odd_cycle_type", c.odd_type);
  j["disc_nonsquare"] = c.disc_nonsquare;
  j["primes_used"] = c.primes_used;
  return j;
}

}  // namespace galcensus
