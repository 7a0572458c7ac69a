#include "galcensus/modp.hpp"

#include <algorithm>
#include <mutex>

namespace galcensus::modp {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

u32 pow_mod(u64 b, u64 e, u32 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

u32 inv_mod(u32 a, u32 p) { return pow_mod(a, p - 2, p); }

// a mod m, m monic and nonempty
void rem_monic(Coeffs& a, const Coeffs& m, u32 p) {
  const int dm = deg(m);
  for (int i = deg(a); i >= dm; --i) {
    const u64 q = a[i];
    if (q == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      const u64 t = q * m[j] % p;
      a[i - dm + j] = static_cast<u32>((a[i - dm + j] + p - t) % p);
    }
  }
  a.resize(static_cast<std::size_t>(std::min(deg(a) + 1, dm)));
  trim(a);
}

Coeffs mul(const Coeffs& a, const Coeffs& b, u32 p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const u64 ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<u32>((r[i + j] + ai * b[j]) % p);
  }
  trim(r);
  return r;
}

void make_monic(Coeffs& a, u32 p) {
  if (a.empty() || a.back() == 1) return;
  const u64 inv = inv_mod(a.back(), p);
  for (auto& c : a) c = static_cast<u32>(c * inv % p);
}

// General remainder (divisor need not be monic).
void rem(Coeffs& a, Coeffs m, u32 p) {
  make_monic(m, p);
  rem_monic(a, m, p);
}

Coeffs gcd(Coeffs a, Coeffs b, u32 p) {
  while (!b.empty()) {
    rem(a, b, p);
    std::swap(a, b);
  }
  make_monic(a, p);
  return a;
}

Coeffs quotient_monic(const Coeffs& a, const Coeffs& m, u32 p) {
  Coeffs r = a;
  const int dm = deg(m);
  const int da = deg(a);
  if (da < dm) return {};
  Coeffs q(static_cast<std::size_t>(da - dm + 1), 0);
  for (int i = da; i >= dm; --i) {
    const u64 c = r[i];
    q[i - dm] = static_cast<u32>(c);
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      const u64 t = c * m[j] % p;
      r[i - dm + j] = static_cast<u32>((r[i - dm + j] + p - t) % p);
    }
  }
  trim(q);
  return q;
}

Coeffs derivative(const Coeffs& a, u32 p) {
  Coeffs r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(static_cast<u32>(u64(a[i]) * (i % p) % p));
  trim(r);
  return r;
}

std::vector<u32>& prime_table() {
  static std::vector<u32> table;
  return table;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % d == 0) return n == d;
  }
  for (u64 d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t nth_prime(std::size_t i) {
  static std::once_flag once;
  std::call_once(once, [] {
    constexpr u32 kLimit = 2'000'000;
    std::vector<bool> composite(kLimit + 1, false);
    auto& t = prime_table();
    for (u32 k = 2; k <= kLimit; ++k) {
      if (composite[k]) continue;
      t.push_back(k);
      for (u64 m = u64(k) * k; m <= kLimit; m += k) composite[m] = true;
    }
  });
  const auto& t = prime_table();
  if (i < t.size()) return t[i];
  // Beyond the table: continue by trial division.
  u32 candidate = t.back();
  std::size_t idx = t.size() - 1;
  while (idx < i) {
    candidate += 2;
    if (is_prime(candidate)) ++idx;
  }
  return candidate;
}

Coeffs reduce(const IntPolynomial& f, std::uint32_t p) {
  Coeffs r;
  r.reserve(static_cast<std::size_t>(f.degree() + 1));
  for (const auto& c : f.constant_first()) r.push_back(static_cast<u32>(mod_ui(c, p)));
  trim(r);
  return r;
}

bool is_squarefree(const Coeffs& f, std::uint32_t p) {
  if (deg(f) <= 0) return true;
  return deg(gcd(f, derivative(f, p), p)) == 0;
}

std::optional<std::vector<int>> factor_degrees(const Coeffs& fin, std::uint32_t p) {
  Coeffs f = fin;
  make_monic(f, p);
  const int k = deg(f);
  std::vector<int> out;
  if (k <= 0) return out;
  if (k == 1) return std::vector<int>{1};
  if (!is_squarefree(f, p)) return std::nullopt;

  // Frobenius is F_p-linear: h(X)^p = h(X^p), so h -> h^p mod f is the matrix
  // whose i-th column is X^{ip} mod f.
  Coeffs xp{0, 1};
  {
    Coeffs base{0, 1};
    rem_monic(base, f, p);
    Coeffs acc{1};
    u64 e = p;
    while (e) {
      if (e & 1) {
        acc = mul(acc, base, p);
        rem_monic(acc, f, p);
      }
      e >>= 1;
      if (e) {
        base = mul(base, base, p);
        rem_monic(base, f, p);
      }
    }
    xp = acc;
  }
  std::vector<Coeffs> q(static_cast<std::size_t>(k));
  q[0] = Coeffs{1};
  for (int i = 1; i < k; ++i) {
    q[i] = mul(q[i - 1], xp, p);
    rem_monic(q[i], f, p);
  }

  Coeffs h{0, 1};
  Coeffs remaining = f;
  int d = 0;
  while (deg(remaining) >= 2 * (d + 1)) {
    ++d;
    Coeffs next(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < deg(h) + 1; ++i) {
      const u64 hi = h[i];
      if (hi == 0) continue;
      const auto& col = q[i];
      for (std::size_t j = 0; j < col.size(); ++j) next[j] = static_cast<u32>((next[j] + hi * col[j]) % p);
    }
    trim(next);
    h = next;
    Coeffs hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + p - 1) % p;
    trim(hx);
    Coeffs g = gcd(remaining, hx, p);
    if (deg(g) > 0) {
      for (int c = 0; c < deg(g) / d; ++c) out.push_back(d);
      remaining = quotient_monic(remaining, g, p);
    }
  }
  if (deg(remaining) > 0) out.push_back(deg(remaining));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> factor_degrees(const IntPolynomial& f, std::uint32_t p) {
  Coeffs r = reduce(f, p);
  if (deg(r) != f.degree()) return std::nullopt;
  return factor_degrees(r, p);
}

std::vector<std::uint32_t> roots(const Coeffs& f, std::uint32_t p) {
  std::vector<u32> out;
  for (u32 x = 0; x < p; ++x) {
    u64 acc = 0;
    for (int i = deg(f); i >= 0; --i) acc = (acc * x + f[i]) % p;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

}  // namespace galcensus::modp
