#include "galcensus/bigint.hpp"

#include <string>

#include "galcensus/errors.hpp"

namespace galcensus {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  return v;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

std::optional<BigInt> is_square_integer(const BigInt& d) {
  if (sgn(d) < 0) return std::nullopt;
  BigInt s, rem;
  mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t());
  if (sgn(rem) != 0) return std::nullopt;
  return s;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace galcensus
