#include "galcensus/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "galcensus/errors.hpp"
#include "galcensus/modp.hpp"
#include "galcensus/roots.hpp"

namespace galcensus {

// ---------------------------------------------------------------------------
// IntPolynomial

void IntPolynomial::normalize() {
  while (c_.size() > 1 && sgn(c_.back()) == 0) c_.pop_back();
  if (c_.empty()) c_.emplace_back(0);
}

IntPolynomial IntPolynomial::from_constant_first(std::vector<BigInt> coeffs) {
  IntPolynomial p(std::move(coeffs));
  p.normalize();
  return p;
}

IntPolynomial IntPolynomial::from_leading_first(const std::vector<BigInt>& coeffs) {
  return from_constant_first(std::vector<BigInt>(coeffs.rbegin(), coeffs.rend()));
}

IntPolynomial IntPolynomial::monic_from_tail(const std::vector<long long>& tail) {
  std::vector<BigInt> c(tail.size() + 1);
  c[tail.size()] = 1;
  for (std::size_t i = 0; i < tail.size(); ++i) c[tail.size() - 1 - i] = static_cast<long>(tail[i]);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return from_constant_first(std::move(v));
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<BigInt> lead_first;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    lead_first.push_back(parse_bigint(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (lead_first.empty()) throw InvalidInput("empty polynomial");
  return from_leading_first(lead_first);
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    out += galcensus::to_string(coeff(i));
    if (i > 0) out += ',';
  }
  return out;
}

std::string IntPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeff(i);
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Arithmetic

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& x = a.constant_first();
  const auto& y = b.constant_first();
  std::vector<BigInt> r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < x.size()) r[i] += x[i];
    if (i < y.size()) r[i] += y[i];
  }
  return IntPolynomial::from_constant_first(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + BigInt(-1) * b;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& x = a.constant_first();
  const auto& y = b.constant_first();
  std::vector<BigInt> r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return IntPolynomial::from_constant_first(std::move(r));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& a) {
  std::vector<BigInt> r = a.constant_first();
  for (auto& c : r) c *= k;
  return IntPolynomial::from_constant_first(std::move(r));
}

BigInt evaluate(const IntPolynomial& f, const BigInt& x) {
  BigInt acc = 0;
  for (int i = f.degree(); i >= 0; --i) {
    acc *= x;
    acc += f.coeff(i);
  }
  return acc;
}

IntPolynomial derivative(const IntPolynomial& f) {
  if (f.degree() == 0) return IntPolynomial();
  std::vector<BigInt> r(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) r[i - 1] = f.coeff(i) * i;
  return IntPolynomial::from_constant_first(std::move(r));
}

BigInt content(const IntPolynomial& f) {
  BigInt g = 0;
  for (const auto& c : f.constant_first()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  BigInt g = content(f);
  if (sgn(f.leading()) < 0) g = -g;
  if (g == 1) return f;
  std::vector<BigInt> r = f.constant_first();
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial::from_constant_first(std::move(r));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial();
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) return std::nullopt;
  std::vector<BigInt> r = a.constant_first();
  std::vector<BigInt> q(static_cast<std::size_t>(da - db + 1));
  const BigInt& lb = b.leading();
  for (int i = da; i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeff(j);
    q[i - db] = c;
  }
  for (int i = 0; i < db; ++i) {
    if (sgn(r[i]) != 0) return std::nullopt;
  }
  return IntPolynomial::from_constant_first(std::move(q));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^{da-db+1} a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r = a.constant_first();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  int dr = a.degree();
  while (dr >= db && !(dr == 0 && sgn(r[0]) == 0)) {
    const BigInt lr = r[dr];
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b.coeff(j);
    r.resize(static_cast<std::size_t>(dr));
    if (r.empty()) r.emplace_back(0);
    while (r.size() > 1 && sgn(r.back()) == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
    if (dr < db) break;
  }
  return IntPolynomial::from_constant_first(std::move(r));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  BigInt ca = content(a);
  BigInt cb = content(b);
  BigInt cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero() && y.degree() > 0) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  if (!y.is_zero()) return IntPolynomial::monomial(cg, 0);  // coprime
  return cg * primitive_part(x);
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& fin) {
  std::vector<std::pair<IntPolynomial, int>> out;
  IntPolynomial f = primitive_part(fin);
  if (f.degree() <= 0) return out;
  IntPolynomial a = gcd(f, derivative(f));
  IntPolynomial b = *divide_exact(f, a);
  if (a.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  IntPolynomial c = *divide_exact(derivative(f), a);
  IntPolynomial d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    IntPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    IntPolynomial nb = *divide_exact(b, g);
    IntPolynomial nc = *divide_exact(d, g);
    b = std::move(nb);
    d = nc - derivative(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resultant / discriminant

namespace {

using i128 = __int128;

// Fraction-free Gaussian elimination. Returns nullopt on int128 overflow.
std::optional<i128> bareiss_i128(std::vector<std::vector<i128>> m) {
  const std::size_t n = m.size();
  i128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        i128 a, b, c;
        if (__builtin_mul_overflow(m[i][j], m[k][k], &a)) return std::nullopt;
        if (__builtin_mul_overflow(m[i][k], m[k][j], &b)) return std::nullopt;
        if (__builtin_sub_overflow(a, b, &c)) return std::nullopt;
        m[i][j] = c / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt bareiss_big(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  BigInt t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(m[piv][k]) == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt to_big(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

}  // namespace

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) return 1;
  if (n == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  if (m == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  bool small = true;
  for (const auto& c : f.constant_first()) small = small && fits_int64(c);
  for (const auto& c : g.constant_first()) small = small && fits_int64(c);
  // Row i < n: f shifted by i; row n + i: g shifted by i. Leading first.
  if (small) {
    std::vector<std::vector<i128>> s(size, std::vector<i128>(size, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k <= m; ++k) s[i][i + k] = to_int64(f.coeff(m - k));
    for (int i = 0; i < m; ++i)
      for (int k = 0; k <= n; ++k) s[n + i][i + k] = to_int64(g.coeff(n - k));
    if (auto d = bareiss_i128(std::move(s))) return to_big(*d);
  }
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(n - k);
  return bareiss_big(std::move(s));
}

BigInt discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw InvalidInput("discriminant of a constant polynomial");
  if (n == 1) return 1;
  BigInt r = resultant(f, derivative(f));
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

// ---------------------------------------------------------------------------
// Integer roots

namespace {

// Cauchy bound min(1 + max|a_i| / |lc|, |a_0|) on integer roots of g with
// g(0) != 0.
BigInt integer_root_bound(const IntPolynomial& g) {
  BigInt mx = 0;
  for (int i = 0; i < g.degree(); ++i) mx = std::max(mx, BigInt(abs(g.coeff(i))));
  BigInt lc = abs(g.leading());
  BigInt b = mx / lc + 1;
  return std::min(b, BigInt(abs(g.coeff(0))));
}

// Horner in int128 with overflow detection.
std::optional<i128> eval_small(const std::vector<std::int64_t>& c, std::int64_t x) {
  i128 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (__builtin_mul_overflow(acc, static_cast<i128>(x), &acc)) return std::nullopt;
    if (__builtin_add_overflow(acc, static_cast<i128>(*it), &acc)) return std::nullopt;
  }
  return acc;
}

bool is_root(const IntPolynomial& g, const std::vector<std::int64_t>* small, std::int64_t x) {
  if (small) {
    if (auto v = eval_small(*small, x)) return *v == 0;
  }
  return sgn(evaluate(g, BigInt(static_cast<long>(x)))) == 0;
}

void push_if_divides(std::vector<BigInt>& out, const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) return;
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) out.push_back(num / den);
}

}  // namespace

namespace detail {

std::vector<BigInt> integer_roots_by_divisors(const IntPolynomial& g, const BigInt& limit) {
  std::vector<BigInt> out;
  const BigInt& c0 = g.coeff(0);
  std::vector<std::int64_t> small;
  bool all_small = true;
  for (const auto& c : g.constant_first()) {
    all_small = all_small && fits_int64(c);
    if (all_small) small.push_back(to_int64(c));
  }
  const auto* sp = all_small ? &small : nullptr;
  const BigInt lim = std::min(limit, BigInt(abs(c0)));
  if (!fits_int64(lim)) throw UnsupportedError("divisor scan limit too large");
  const std::int64_t n = to_int64(lim);
  const bool c_small = fits_int64(c0);
  const std::int64_t cs = c_small ? to_int64(c0) : 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    const bool divides = c_small ? (cs % d == 0) : mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(d)) != 0;
    if (!divides) continue;
    if (is_root(g, sp, -d)) out.emplace_back(static_cast<long>(-d));
    if (is_root(g, sp, d)) out.emplace_back(static_cast<long>(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> integer_roots_by_lifting(const IntPolynomial& gin) {
  // Integer roots of g are roots of its squarefree part s. Pick p with s mod p
  // squarefree of full degree; every integer root reduces to a simple root
  // mod p, whose Newton lift to p^K > 2B is the integer itself.
  IntPolynomial s = primitive_part(gin);
  IntPolynomial sd = gcd(s, derivative(s));
  if (sd.degree() > 0) s = primitive_part(*divide_exact(s, sd));
  const BigInt bound = integer_root_bound(s);
  std::uint32_t p = 0;
  modp::Coeffs sp;
  for (std::size_t i = 0;; ++i) {
    p = modp::nth_prime(i);
    sp = modp::reduce(s, p);
    if (static_cast<int>(sp.size()) - 1 == s.degree() && modp::is_squarefree(sp, p)) break;
  }
  BigInt modulus = p;
  const BigInt target = 2 * bound + 1;
  std::vector<BigInt> out;
  const IntPolynomial ds = derivative(s);
  for (std::uint32_t r0 : modp::roots(sp, p)) {
    BigInt r = static_cast<unsigned long>(r0);
    BigInt m = p;
    while (m <= target) {
      m *= m;
      BigInt fr = evaluate(s, r);
      BigInt dr = evaluate(ds, r);
      BigInt inv;
      mpz_mod(dr.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t());
      if (mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), m.get_mpz_t()) == 0) break;
      r = r - fr * inv;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    }
    if (2 * r > m) r -= m;
    if (abs(r) <= bound && sgn(evaluate(s, r)) == 0) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

std::vector<BigInt> integer_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw InvalidInput("integer_roots of the zero polynomial");
  std::vector<BigInt> out;
  int shift = 0;
  while (shift <= f.degree() && sgn(f.coeff(shift)) == 0) ++shift;
  if (shift > 0) out.emplace_back(0);
  const auto& cf = f.constant_first();
  IntPolynomial g = IntPolynomial::from_constant_first(std::vector<BigInt>(cf.begin() + shift, cf.end()));
  const int d = g.degree();
  if (d == 1) {
    push_if_divides(out, BigInt(-g.coeff(0)), g.coeff(1));
  } else if (d == 2) {
    const BigInt& a = g.coeff(2);
    const BigInt& b = g.coeff(1);
    const BigInt& c = g.coeff(0);
    if (auto s = is_square_integer(b * b - 4 * a * c)) {
      push_if_divides(out, BigInt(-b + *s), BigInt(2 * a));
      if (sgn(*s) != 0) push_if_divides(out, BigInt(-b - *s), BigInt(2 * a));
    }
  } else if (d > 2) {
    const BigInt bound = integer_root_bound(g);
    std::vector<BigInt> r = bound <= (1 << 16) ? detail::integer_roots_by_divisors(g, bound)
                                               : detail::integer_roots_by_lifting(g);
    out.insert(out.end(), r.begin(), r.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Factorization

FactorPattern Factorization::pattern() const {
  FactorPattern p;
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) p.degrees.push_back(g.degree());
  std::sort(p.degrees.begin(), p.degrees.end());
  p.has_linear = !p.degrees.empty() && p.degrees.front() == 1;
  return p;
}

IntPolynomial Factorization::expand() const {
  IntPolynomial r = IntPolynomial::monomial(BigInt(1), 0);
  for (const auto& [g, m] : factors)
    for (int i = 0; i < m; ++i) r = r * g;
  return r;
}

namespace detail {

std::vector<int> possible_factor_degrees(const IntPolynomial& g, int prime_count) {
  const int k = g.degree();
  // bit d set <=> a factor of degree d is still possible
  std::uint64_t mask = (k >= 63 ? ~0ull : ((1ull << (k + 1)) - 1)) & ~1ull;
  const std::uint64_t proper = mask & ~(1ull << k);
  int used = 0;
  for (std::size_t i = 0; used < prime_count && i < static_cast<std::size_t>(8 * prime_count + 64); ++i) {
    const std::uint32_t p = modp::nth_prime(i);
    auto degs = modp::factor_degrees(g, p);
    if (!degs) continue;
    ++used;
    std::uint64_t sums = 1;
    for (int dd : *degs) sums |= sums << dd;
    mask &= sums;
    if ((mask & proper) == 0) break;
  }
  std::vector<int> out;
  for (int d = 1; d < k; ++d)
    if (mask & (1ull << d)) out.push_back(d);
  return out;
}

namespace {

std::vector<std::int64_t> small_divisors(std::int64_t n, std::int64_t limit) {
  std::vector<std::int64_t> out;
  n = std::llabs(n);
  for (std::int64_t d = 1; d <= limit && d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

std::optional<IntPolynomial> find_factor_grid(const IntPolynomial& g, int d) {
  if (d != 2) return std::nullopt;
  const double rb = root_bound(g);
  if (!(rb < 1e6)) return std::nullopt;
  const std::int64_t b = static_cast<std::int64_t>(std::ceil(rb));
  const BigInt& c0 = g.coeff(0);
  if (!fits_int64(c0) || std::llabs(to_int64(c0)) > (1ll << 40)) return std::nullopt;
  const BigInt g1 = evaluate(g, BigInt(1));
  const BigInt gm1 = evaluate(g, BigInt(-1));
  for (std::int64_t dv : small_divisors(to_int64(c0), b * b)) {
    for (std::int64_t s : {dv, -dv}) {
      for (std::int64_t c1 = -2 * b; c1 <= 2 * b; ++c1) {
        // q(1) | g(1) and q(-1) | g(-1); neither is zero since g has no
        // integer roots.
        const BigInt q1 = 1 + c1 + s;
        const BigInt qm1 = 1 - c1 + s;
        if (sgn(q1) == 0 || sgn(qm1) == 0) continue;
        if (!mpz_divisible_p(g1.get_mpz_t(), q1.get_mpz_t())) continue;
        if (!mpz_divisible_p(gm1.get_mpz_t(), qm1.get_mpz_t())) continue;
        IntPolynomial q = IntPolynomial::from_constant_first(
            {BigInt(static_cast<long>(s)), BigInt(static_cast<long>(c1)), BigInt(1)});
        if (divide_exact(g, q)) return q;
      }
    }
  }
  return std::nullopt;
}

std::optional<IntPolynomial> find_factor_root_subsets(const IntPolynomial& g, int d) {
  const int k = g.degree();
  // Coefficients of a degree-d factor are elementary symmetric functions of d
  // roots; choose a root radius r that keeps every such function within 1/4.
  long double r_target = 1.0L;
  const long double bound = static_cast<long double>(root_bound(g)) + 1.0L;
  const long double central = binomial(static_cast<unsigned>(d), static_cast<unsigned>(d / 2)).get_d();
  r_target = 1.0L / (16.0L * d * central * std::pow(bound + 1.0L, static_cast<long double>(d)));
  for (int attempt = 0; attempt < 6; ++attempt, r_target /= 1024.0L) {
    RootSet rs = complex_roots(g, r_target);
    const long double r = rs.error_radius;
    long double m = 0;
    for (const auto& z : rs.roots) m = std::max(m, z.abs_upper());
    const long double u = std::ldexp(1.0L, -static_cast<int>(rs.precision_bits) + 4);
    std::vector<long double> err(static_cast<std::size_t>(d) + 1);
    bool ok = true;
    for (int j = 1; j <= d; ++j) {
      const long double cj = binomial(static_cast<unsigned>(d), static_cast<unsigned>(j)).get_d();
      err[j] = cj * (std::pow(m + r, static_cast<long double>(j)) - std::pow(m, static_cast<long double>(j))) +
               cj * std::pow(m + r, static_cast<long double>(j)) * u * (d + 1);
      err[j] *= 1.01L;
      ok = ok && err[j] < 0.25L;
    }
    if (!ok) continue;

    const mpfr_prec_t bits = rs.precision_bits;
    std::vector<int> idx(static_cast<std::size_t>(d));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      // prod (X - z_i), constant-first
      std::vector<Complex> prod{Complex(1.0, 0.0, bits)};
      for (int i : idx) {
        std::vector<Complex> next(prod.size() + 1, Complex(bits));
        for (std::size_t t = 0; t < prod.size(); ++t) {
          next[t + 1] += prod[t];
          next[t] -= prod[t] * rs.roots[static_cast<std::size_t>(i)];
        }
        prod = std::move(next);
      }
      bool candidate = true;
      std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1);
      for (int t = 0; t <= d && candidate; ++t) {
        coeffs[t] = prod[t].re.round_to_integer();
        const int j = d - t;  // e_j up to sign
        const long double tol = j == 0 ? 0.25L : err[j];
        Real diff = prod[t].re - Real(coeffs[t], bits);
        candidate = diff.abs_upper() <= tol && prod[t].im.abs_upper() <= tol;
      }
      if (candidate) {
        IntPolynomial q = IntPolynomial::from_constant_first(coeffs);
        if (q.degree() == d && q.is_monic() && divide_exact(g, q)) return q;
      }
      // next combination
      int pos = d - 1;
      while (pos >= 0 && idx[pos] == k - d + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int t = pos + 1; t < d; ++t) idx[t] = idx[t - 1] + 1;
    }
    return std::nullopt;
  }
  throw PrecisionExhausted("root-subset factor search could not certify candidate rounding", 0.0);
}

}  // namespace detail

namespace {

void split_irreducible(const IntPolynomial& h, std::vector<IntPolynomial>& out) {
  const int k = h.degree();
  if (k <= 3) {
    out.push_back(h);
    return;
  }
  for (int d : detail::possible_factor_degrees(h, 24)) {
    if (d < 2 || 2 * d > k) continue;
    std::optional<IntPolynomial> q = detail::find_factor_grid(h, d);
    if (!q) q = detail::find_factor_root_subsets(h, d);
    if (q) {
      split_irreducible(*q, out);
      split_irreducible(*divide_exact(h, *q), out);
      return;
    }
  }
  out.push_back(h);
}

void factor_squarefree(const IntPolynomial& g, std::vector<IntPolynomial>& out) {
  IntPolynomial h = g;
  for (const BigInt& r : integer_roots(g)) {
    IntPolynomial lin = IntPolynomial::from_constant_first({BigInt(-r), BigInt(1)});
    out.push_back(lin);
    h = *divide_exact(h, lin);
  }
  if (h.degree() >= 1) split_irreducible(h, out);
}

bool poly_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

Factorization factorize(const IntPolynomial& f, int max_degree) {
  if (f.degree() > max_degree)
    throw UnsupportedError("factorization supports degree <= " + std::to_string(max_degree) + ", got " +
                           std::to_string(f.degree()));
  if (!f.is_monic()) throw InvalidInput("factorize expects a monic polynomial");
  Factorization out;
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    std::vector<IntPolynomial> parts;
    factor_squarefree(g, parts);
    for (auto& q : parts) out.factors.emplace_back(std::move(q), m);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

FactorPattern factor_pattern(const IntPolynomial& f, int max_degree) {
  return factorize(f, max_degree).pattern();
}

}  // namespace galcensus
