#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace galcensus {

using BigInt = mpz_class;

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& v);

inline bool fits_int64(const BigInt& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }
inline std::int64_t to_int64(const BigInt& v) { return mpz_get_si(v.get_mpz_t()); }

/// Nonnegative residue of v modulo p (p > 0).
inline std::uint64_t mod_ui(const BigInt& v, std::uint64_t p) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

/// Exact integer square root: s with s*s == d, or nullopt when d is negative
/// or not a perfect square.
std::optional<BigInt> is_square_integer(const BigInt& d);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

}  // namespace galcensus
