#include "galcensus/resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "galcensus/modp.hpp"

namespace galcensus {

namespace {

struct Plan {
  int n = 0;
  int big_n = 0;       // n(n+1)/2, the total degree of each product
  long double terms;   // number of monomials summed into one R_sigma
  long double ops;     // rough count of rounded operations per R_sigma
  long double scale_log2_base;  // log2 of the magnitude multiplier before A^N
  bool symmetric = false;
  bool alternating = false;
};

Plan make_plan(const PermGroup& g) {
  Plan pl;
  pl.n = g.degree();
  pl.big_n = pl.n * (pl.n + 1) / 2;
  pl.symmetric = g.is_symmetric();
  pl.alternating = !pl.symmetric && g.is_alternating();
  long double nfact = 1;
  for (int i = 2; i <= pl.n; ++i) nfact *= i;
  const long double two_n = std::ldexp(1.0L, pl.n);
  if (pl.symmetric || pl.alternating) {
    pl.terms = nfact;
    pl.ops = 8.0L * (two_n * pl.n + pl.big_n + pl.n * pl.n);
    pl.scale_log2_base = std::log2(std::max(nfact, two_n * std::pow(static_cast<long double>(pl.n), pl.n)));
  } else {
    pl.terms = static_cast<long double>(g.order());
    pl.ops = 8.0L * (pl.big_n + pl.terms * pl.n);
    pl.scale_log2_base = std::log2(pl.terms);
  }
  return pl;
}

// powers[j][i] = alpha_j^i for i = 0..n
std::vector<std::vector<Complex>> root_powers(const std::vector<Complex>& a) {
  const int n = static_cast<int>(a.size());
  const mpfr_prec_t bits = a.front().precision();
  std::vector<std::vector<Complex>> pw(a.size());
  for (int j = 0; j < n; ++j) {
    pw[j].push_back(Complex(1.0, 0.0, bits));
    for (int i = 1; i <= n; ++i) pw[j].push_back(pw[j].back() * a[j]);
  }
  return pw;
}

// Ryser: perm(M) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} M_ij, with a
// Gray-code walk over S. M_ij = alpha_j^i.
Complex permanent(const std::vector<std::vector<Complex>>& pw) {
  const int n = static_cast<int>(pw.size());
  const mpfr_prec_t bits = pw.front().front().precision();
  std::vector<Complex> row(static_cast<std::size_t>(n), Complex(bits));
  Complex total(bits);
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < (1u << n); ++k) {
    const int j = __builtin_ctz(k);
    const bool adding = ((gray >> j) & 1u) == 0;
    gray ^= 1u << j;
    for (int i = 0; i < n; ++i) {
      if (adding)
        row[i] += pw[j][i + 1];
      else
        row[i] -= pw[j][i + 1];
    }
    Complex prod = row[0];
    for (int i = 1; i < n; ++i) prod *= row[i];
    const int size = __builtin_popcount(gray);
    if ((size + n) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

// det[alpha_j^i] = prod_j alpha_j * prod_{i<j} (alpha_j - alpha_i)
Complex power_determinant(const std::vector<Complex>& a) {
  const int n = static_cast<int>(a.size());
  Complex d(1.0, 0.0, a.front().precision());
  for (int j = 0; j < n; ++j) d *= a[j];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d *= a[j] - a[i];
  return d;
}

Complex explicit_value(const Permutation& sigma, const PermGroup& g, const std::vector<std::vector<Complex>>& pw) {
  const int n = g.degree();
  const mpfr_prec_t bits = pw.front().front().precision();
  Complex sum(bits);
  for (const auto& tau : g.elements()) {
    const Permutation st = sigma * tau;
    Complex prod = pw[st(0)][1];
    for (int i = 1; i < n; ++i) prod *= pw[st(i)][i + 1];
    sum += prod;
  }
  return sum;
}

std::vector<Complex> invariant_values(const CosetSystem& cs, const std::vector<Complex>& roots, const Plan& pl) {
  const auto pw = root_powers(roots);
  std::vector<Complex> out;
  if (pl.symmetric || pl.alternating) {
    Complex perm = permanent(pw);
    Complex det(roots.front().precision());
    if (pl.alternating) det = power_determinant(roots);
    Real half(0.5, roots.front().precision());
    for (const auto& s : cs.representatives) {
      if (pl.symmetric) {
        out.push_back(perm);
        continue;
      }
      Complex v = s.sign() == 1 ? perm + det : perm - det;
      out.push_back(Complex(v.re * half, v.im * half));
    }
    return out;
  }
  for (const auto& s : cs.representatives) out.push_back(explicit_value(s, cs.group, pw));
  return out;
}

long double log2_binomial(int m, int k) {
  return (std::lgamma(static_cast<long double>(m) + 1) - std::lgamma(static_cast<long double>(k) + 1) -
          std::lgamma(static_cast<long double>(m - k) + 1)) /
         std::log(2.0L);
}

// Bound on the error of every coefficient of prod(z - R_i) given |R_i| <= mr
// and per-value error dr, at working precision bits. Returned as log2.
long double coefficient_error_log2(int m, long double log2_mr, long double log2_dr, int bits) {
  long double worst = -INFINITY;
  for (int k = 1; k <= m; ++k) {
    const long double lb = log2_binomial(m, k);
    const long double prop = lb + std::log2(static_cast<long double>(k)) + log2_dr + (k - 1) * log2_mr;
    const long double flt = lb + std::log2(4.0L * (m + 2)) - bits + k * log2_mr;
    const long double hi = std::max(prop, flt);
    worst = std::max(worst, hi + std::log2(1.0L + std::exp2(std::min(prop, flt) - hi)));
  }
  return worst;
}

long double log2_add(long double a, long double b) {
  const long double hi = std::max(a, b);
  if (hi == -INFINITY) return hi;
  return hi + std::log2(1.0L + std::exp2(std::min(a, b) - hi));
}

struct Attempt {
  std::vector<Complex> raw;  // raw coefficients, constant first
  long double error_log2 = INFINITY;
  double margin = 1;
  long double log2_dr = 0;
  std::vector<Complex> values;
  int bits = 0;
};

Attempt evaluate_attempt(const IntPolynomial& f, const CosetSystem& cs, const Plan& pl, int bits,
                         long double log2_delta, const ResolventOptions& opt) {
  const int n = pl.n;
  const int m = static_cast<int>(cs.representatives.size());
  RootOptions ro{bits, std::max(opt.max_bits, bits) * 2};
  RootSet rs = complex_roots(f, std::max(std::exp2(log2_delta), 1e-4900L), ro);
  const int w = std::max(bits, rs.precision_bits);
  std::vector<Complex> roots;
  for (int i = 0; i < n; ++i) {
    const int src = opt.root_order.empty() ? i : opt.root_order[static_cast<std::size_t>(i)];
    roots.push_back(with_precision(rs.roots[static_cast<std::size_t>(src)], w));
  }
  Attempt at;
  at.bits = w;
  at.values = invariant_values(cs, roots, pl);

  long double amax = 0;
  for (const auto& r : roots) amax = std::max(amax, r.abs_upper());
  const long double a = std::max(1.0L, amax + rs.error_radius);
  const long double la = std::log2(a);
  const long double prop =
      rs.error_radius > 0
          ? std::log2(pl.terms * pl.big_n * rs.error_radius) + (pl.big_n - 1) * la
          : -INFINITY;
  const long double flt = std::log2(pl.ops) - w + pl.scale_log2_base + pl.big_n * la;
  at.log2_dr = log2_add(prop, flt);
  long double rmax = 0;
  for (const auto& v : at.values) rmax = std::max(rmax, v.abs_upper());
  const long double log2_mr = std::max(0.0L, std::log2(rmax + std::exp2(at.log2_dr)));
  at.error_log2 = coefficient_error_log2(m, log2_mr, at.log2_dr, w);

  // expand prod (z - R)
  std::vector<Complex> poly{Complex(1.0, 0.0, w)};
  for (const auto& r : at.values) {
    std::vector<Complex> next(poly.size() + 1, Complex(w));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * r;
    }
    poly = std::move(next);
  }
  at.raw = std::move(poly);
  double margin = 0;
  for (const auto& c : at.raw) {
    Real frac = c.re - Real(c.re.round_to_integer(), w);
    Real dist = hypot(frac, c.im);
    margin = std::max(margin, static_cast<double>(dist.abs_upper()));
  }
  at.margin = margin;
  return at;
}

bool values_separated(const std::vector<Complex>& v, long double log2_dr) {
  const long double gap = 2.0L * std::exp2(log2_dr);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Real d = (v[i] - v[j]).abs();
      if (!(mpfr_get_ld(d.raw(), MPFR_RNDD) * (1.0L - 1e-15L) > gap)) return false;
    }
  return true;
}

}  // namespace

Complex invariant_value(const Permutation& sigma, const PermGroup& g, const RootSet& roots) {
  if (sigma.degree() != g.degree() || static_cast<int>(roots.roots.size()) != g.degree())
    throw InvalidInput("invariant_value: degree mismatch");
  const Plan pl = make_plan(g);
  CosetSystem cs{g, {sigma}};
  return invariant_values(cs, roots.roots, pl).front();
}

Resolvent galois_resolvent(const IntPolynomial& f, const PermGroup& g, const ResolventOptions& options) {
  return galois_resolvent(f, left_coset_reps(g), options);
}

Resolvent galois_resolvent(const IntPolynomial& f, const CosetSystem& cs, const ResolventOptions& options) {
  const int n = f.degree();
  if (!f.is_monic() || n < 1) throw InvalidInput("galois_resolvent needs a monic polynomial of degree >= 1");
  if (n != cs.group.degree()) throw InvalidInput("galois_resolvent: group degree differs from deg f");
  if (!options.root_order.empty()) {
    std::vector<int> sorted = options.root_order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(sorted.size()) != n || sorted[static_cast<std::size_t>(i)] != i)
        throw InvalidInput("root_order must be a permutation of 0..n-1");
  }
  const Plan pl = make_plan(cs.group);
  const int m = static_cast<int>(cs.representatives.size());

  // A priori plan from a coarse root magnitude estimate.
  // The plan only sizes the precision; acceptance is checked a posteriori.
  long double amax = 0;
  for (const auto& r : approximate_roots(f)) amax = std::max(amax, std::abs(r));
  const long double la = std::log2(std::max(1.0L, amax * (1.0L + 1e-6L) + 1e-6L));
  const long double log2_mr = std::max(0.0L, std::log2(pl.terms) + pl.big_n * la);
  long double need_dr = -6;  // log2 of the tolerated per-value error
  for (int k = 1; k <= m; ++k)
    need_dr = std::min(need_dr, -6 - (log2_binomial(m, k) + std::log2(static_cast<long double>(k)) + (k - 1) * log2_mr));
  long double log2_delta = need_dr - std::log2(pl.terms * pl.big_n) - (pl.big_n - 1) * la;
  long double need_bits = 6 + std::log2(4.0L * (m + 2)) + log2_binomial(m, m / 2) + m * log2_mr;
  need_bits = std::max(need_bits, 1 - need_dr + std::log2(pl.ops) + pl.scale_log2_base + pl.big_n * la);
  need_bits = std::max(need_bits, 16 - log2_delta);
  int bits = std::max(options.initial_bits, static_cast<int>(std::ceil(need_bits)) + 16);
  bits = (bits + 63) / 64 * 64;

  Attempt last;
  bool have_last = false;
  while (true) {
    const int use_bits = std::min(bits, options.max_bits);
    try {
      last = evaluate_attempt(f, cs, pl, use_bits, log2_delta, options);
      have_last = true;
    } catch (const PrecisionExhausted&) {
      if (bits >= options.max_bits) break;
      bits *= 2;
      log2_delta -= bits / 2;
      continue;
    }
    if (last.error_log2 < -2 && last.margin < 0.25) {
      Resolvent out{cs.group, m, IntPolynomial(), last.margin, static_cast<double>(std::exp2(last.error_log2)),
                    last.bits, false};
      std::vector<BigInt> c;
      for (const auto& x : last.raw) c.push_back(x.re.round_to_integer());
      out.coefficients = IntPolynomial::from_constant_first(std::move(c));
      if (!values_separated(last.values, last.log2_dr)) {
        out.degenerate = gcd(out.coefficients, derivative(out.coefficients)).degree() > 0;
      }
      return out;
    }
    if (bits >= options.max_bits) break;
    bits *= 2;
    log2_delta -= bits / 2;
  }
  std::vector<std::string> raw;
  double margin = 1;
  if (have_last) {
    for (auto it = last.raw.rbegin(); it != last.raw.rend(); ++it) raw.push_back(it->re.to_string(40));
    margin = last.margin;
  }
  throw UncertifiedResolvent("resolvent rounding not certified within " + std::to_string(options.max_bits) + " bits",
                             std::move(raw), margin);
}

std::vector<BigInt> integer_root_test(const Resolvent& phi) { return integer_roots(phi.coefficients); }

GenericCheck generic_group_check(int n, const std::vector<long long>& prefix, const PermGroup& g, int sample_budget) {
  if (static_cast<int>(prefix.size()) != n - 1) throw InvalidInput("prefix must hold a_1..a_{n-1}");
  if (g.degree() != n) throw InvalidInput("group degree differs from n");
  GenericCheck out;
  if (index_and_delta(g).index == 1) {
    out.outcome = Genericity::certified_generic_Sn;
    return out;
  }
  for (int s = 0; s < sample_budget; ++s) {
    const long long t0 = (s % 2 == 0) ? (s / 2 + 1) : -(s / 2 + 1);
    std::vector<long long> tail = prefix;
    tail.push_back(t0);
    ++out.samples_tried;
    Resolvent phi;
    try {
      phi = galois_resolvent(IntPolynomial::monic_from_tail(tail), g);
    } catch (const UncertifiedResolvent&) {
      continue;
    }
    if (phi.degenerate) continue;
    if (detail::possible_factor_degrees(phi.coefficients, 24).empty()) {
      out.outcome = Genericity::certified_generic_Sn;
      out.witness_t = t0;
      return out;
    }
  }
  return out;
}

nlohmann::json to_json(const Resolvent& phi) {
  nlohmann::json j;
  j["group"] = phi.group.name().empty() ? phi.group.generators_text() : phi.group.name();
  j["degree"] = phi.degree;
  std::vector<std::string> coeffs;
  for (const auto& c : phi.coefficients.leading_first()) coeffs.push_back(to_string(c));
  j["coefficients"] = coeffs;
  j["margin"] = phi.rounding_margin;
  j["precision_bits"] = phi.precision_bits;
  j["degenerate"] = phi.degenerate;
  return j;
}

}  // namespace galcensus
