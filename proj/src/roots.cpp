#include "galcensus/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "galcensus/errors.hpp"

namespace galcensus {

double root_bound(const IntPolynomial& f) {
  if (f.is_zero()) throw InvalidInput("root bound of the zero polynomial");
  const int n = f.degree();
  if (n < 1) throw InvalidInput("root bound needs degree >= 1");
  constexpr mpfr_prec_t kBits = 128;
  mpfr_t best, term, den, lead;
  mpfr_inits2(kBits, best, term, den, lead, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(best, 1);
  mpfr_set_z(lead, f.leading().get_mpz_t(), MPFR_RNDD);
  mpfr_abs(lead, lead, MPFR_RNDD);
  for (int k = 1; k <= n; ++k) {
    const BigInt& ak = f.coeff(n - k);
    if (sgn(ak) == 0) continue;
    mpfr_set_z(term, ak.get_mpz_t(), MPFR_RNDU);
    mpfr_abs(term, term, MPFR_RNDU);
    BigInt c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    mpfr_set_z(den, c.get_mpz_t(), MPFR_RNDD);
    mpfr_mul(den, den, lead, MPFR_RNDD);
    mpfr_div(term, term, den, MPFR_RNDU);
    mpfr_rootn_ui(term, term, static_cast<unsigned long>(k), MPFR_RNDU);
    if (mpfr_greater_p(term, best)) mpfr_set(best, term, MPFR_RNDU);
  }
  // 1 / (2^{1/n} - 1), rounded up
  mpfr_set_ui(den, 2, MPFR_RNDD);
  mpfr_rootn_ui(den, den, static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_sub_ui(den, den, 1, MPFR_RNDD);
  mpfr_div(best, best, den, MPFR_RNDU);
  const double out = mpfr_get_d(best, MPFR_RNDU);
  mpfr_clears(best, term, den, lead, static_cast<mpfr_ptr>(nullptr));
  return out;
}

namespace {

using cld = std::complex<long double>;

struct Horner {
  Complex value;
  Complex deriv;
};

Horner horner(const std::vector<Real>& coeffs, const Complex& z) {
  const mpfr_prec_t bits = z.precision();
  Complex v(bits), d(bits);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    d *= z;
    d += v;
    v *= z;
    v.re += *it;
  }
  return {std::move(v), std::move(d)};
}

// Starting points on the root-bound circle at equally spaced angles, rotated
// by a fixed irrational offset.
std::vector<cld> initial_points(int k, long double radius) {
  std::vector<cld> z;
  constexpr long double kOffset = 0.70710678118654752440L;  // 1/sqrt(2) rad
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (int j = 0; j < k; ++j) z.push_back(std::polar(radius, two_pi * j / k + kOffset));
  return z;
}

// Long double Aberth phase; returns true on convergence. A root whose
// correction falls below the long double noise floor is frozen.
cld quotient(cld a, cld b) {
  const long double den = b.real() * b.real() + b.imag() * b.imag();
  return {(a.real() * b.real() + a.imag() * b.imag()) / den, (a.imag() * b.real() - a.real() * b.imag()) / den};
}

long double modulus2(cld a) { return a.real() * a.real() + a.imag() * a.imag(); }

bool aberth_ld(const std::vector<long double>& c, std::vector<cld>& z) {
  const int k = static_cast<int>(z.size());
  std::vector<bool> done(static_cast<std::size_t>(k), false);
  int remaining = k;
  for (int iter = 0; iter < 800 && remaining > 0; ++iter) {
    for (int i = 0; i < k; ++i) {
      if (done[i]) continue;
      cld v = 0, d = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z[i] + v;
        v = v * z[i] + *it;
      }
      if (v == cld(0)) {
        done[i] = true;
        --remaining;
        continue;
      }
      cld ratio = quotient(v, d);
      cld s = 0;
      for (int j = 0; j < k; ++j)
        if (j != i) s += quotient(1.0L, z[i] - z[j]);
      cld w = quotient(ratio, 1.0L - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      const long double scale = 1.0L + modulus2(z[i]);
      if (modulus2(w) < 1e-32L * scale) {
        done[i] = true;
        --remaining;
      }
    }
  }
  return remaining == 0;
}

struct Certificate {
  bool ok = false;
  long double radius = 0;
};

// Inclusion disks D(z_i, k |W_i|), W_i = g(z_i) / (lc prod_{j != i}(z_i - z_j)):
// when pairwise disjoint, each holds exactly one root of g.
Certificate certify(const IntPolynomial& g, const std::vector<Real>& coeffs, const std::vector<Complex>& z) {
  const int k = g.degree();
  const mpfr_prec_t bits = z.front().precision();
  const long double u = std::ldexp(1.0L, -static_cast<int>(bits));
  std::vector<long double> abs_coeff;
  for (const auto& c : g.constant_first()) abs_coeff.push_back(abs_upper(c));
  const long double lc = std::fabs(to_long_double(g.leading())) * (1.0L - 1e-15L);
  std::vector<long double> rho(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    Horner h = horner(coeffs, z[i]);
    const long double az = z[i].abs_upper();
    long double magnitude = 0;
    for (auto it = abs_coeff.rbegin(); it != abs_coeff.rend(); ++it) magnitude = magnitude * az + *it;
    const long double eval_err = 8.0L * (k + 2) * u * magnitude;
    Complex prod(1.0, 0.0, bits);
    for (int j = 0; j < k; ++j)
      if (j != i) prod *= z[i] - z[j];
    Real pa = prod.abs();
    long double plow = mpfr_get_ld(pa.raw(), MPFR_RNDD) * (1.0L - 8.0L * (k + 2) * u) * (1.0L - 1e-15L);
    if (!(plow > 0)) return {};
    rho[i] = k * (h.value.abs_upper() + eval_err) / (lc * plow) * (1.0L + 1e-12L);
    if (!std::isfinite(rho[i])) return {};
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Real dist = (z[i] - z[j]).abs();
      const long double dlow = mpfr_get_ld(dist.raw(), MPFR_RNDD) * (1.0L - 1e-15L);
      if (!(dlow > rho[i] + rho[j])) return {};
    }
  }
  return {true, *std::max_element(rho.begin(), rho.end())};
}

// Roots of a primitive squarefree polynomial.
RootSet roots_squarefree(const IntPolynomial& g, long double target, const RootOptions& opt) {
  const int k = g.degree();
  RootSet out;
  int bits = std::max(opt.initial_bits, 64);
  if (k == 1) {
    out.precision_bits = bits;
    Complex z(bits);
    const int exact_num = mpfr_set_z(z.re.raw(), g.coeff(0).get_mpz_t(), MPFR_RNDN);
    Real den(g.coeff(1), bits);
    const int exact_div = mpfr_div(z.re.raw(), z.re.raw(), den.raw(), MPFR_RNDN);
    mpfr_neg(z.re.raw(), z.re.raw(), MPFR_RNDN);
    out.error_radius = (exact_num == 0 && exact_div == 0) ? 0.0L : z.abs_upper() * std::ldexp(1.0L, 1 - bits);
    out.roots.push_back(std::move(z));
    return out;
  }

  std::vector<long double> cld_coeffs;
  for (const auto& c : g.constant_first()) cld_coeffs.push_back(to_long_double(c));
  const long double radius = std::max<long double>(root_bound(g), 1e-6L);
  std::vector<cld> start = initial_points(k, radius);
  const bool converged = aberth_ld(cld_coeffs, start);
  if (!converged) start = initial_points(k, radius);

  std::vector<Complex> z;
  long double best = INFINITY;
  while (true) {
    std::vector<Real> coeffs;
    for (const auto& c : g.constant_first()) coeffs.emplace_back(c, bits);
    if (z.empty()) {
      for (const auto& s : start) z.emplace_back(static_cast<double>(s.real()), static_cast<double>(s.imag()), bits);
      // restore the long double digits beyond double
      for (int i = 0; i < k; ++i) {
        mpfr_set_ld(z[i].re.raw(), start[i].real(), MPFR_RNDN);
        mpfr_set_ld(z[i].im.raw(), start[i].imag(), MPFR_RNDN);
      }
    } else {
      for (auto& zi : z) zi = with_precision(zi, bits);
    }
    const int max_iter = converged ? 60 : 2000;
    const long double tol = std::ldexp(1.0L, -bits + 6);
    for (int iter = 0; iter < max_iter; ++iter) {
      long double worst = 0;
      for (int i = 0; i < k; ++i) {
        Horner h = horner(coeffs, z[i]);
        if (h.value.is_zero()) continue;
        Complex ratio = h.value / h.deriv;
        Complex s(bits);
        Complex one(1.0, 0.0, bits);
        for (int j = 0; j < k; ++j)
          if (j != i) s += one / (z[i] - z[j]);
        Complex w = ratio / (one - ratio * s);
        z[i] -= w;
        const long double aw = w.abs_upper();
        if (!std::isfinite(aw)) break;
        worst = std::max(worst, aw / (1.0L + z[i].abs_upper()));
      }
      if (worst < tol) break;
    }
    Certificate cert = certify(g, coeffs, z);
    if (cert.ok) {
      best = std::min(best, cert.radius);
      if (cert.radius <= target) {
        out.roots = std::move(z);
        out.error_radius = cert.radius;
        out.precision_bits = bits;
        return out;
      }
    }
    if (bits * 2 > opt.max_bits) {
      throw PrecisionExhausted("root certificate did not reach target error at " + std::to_string(bits) + " bits",
                               static_cast<double>(best));
    }
    bits *= 2;
  }
}

}  // namespace

std::vector<std::complex<long double>> approximate_roots(const IntPolynomial& f) {
  if (f.is_zero() || f.degree() < 1) throw InvalidInput("approximate_roots needs degree >= 1");
  std::vector<long double> c;
  for (const auto& x : f.constant_first()) c.push_back(to_long_double(x));
  std::vector<cld> z = initial_points(f.degree(), std::max<long double>(root_bound(f), 1e-6L));
  aberth_ld(c, z);
  return z;
}

RootSet complex_roots(const IntPolynomial& f, long double target_error, const RootOptions& options) {
  if (f.is_zero() || f.degree() < 1) throw InvalidInput("complex_roots needs degree >= 1");
  RootSet out;
  std::vector<std::pair<RootSet, int>> parts;
  for (const auto& [g, m] : squarefree_decomposition(f)) parts.emplace_back(roots_squarefree(g, target_error, options), m);
  int bits = options.initial_bits;
  for (const auto& [rs, m] : parts) bits = std::max(bits, rs.precision_bits);
  out.precision_bits = bits;
  for (auto& [rs, m] : parts) {
    out.error_radius = std::max(out.error_radius, rs.error_radius);
    for (const auto& z : rs.roots)
      for (int i = 0; i < m; ++i) out.roots.push_back(with_precision(z, bits));
  }
  return out;
}

}  // namespace galcensus
