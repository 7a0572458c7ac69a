#pragma once

// Polynomials over F_p for small primes p < 2^31: reduction, squarefreeness,
// and the factor-degree multiset via distinct-degree factorization.

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "galcensus/poly.hpp"

namespace galcensus::modp {

/// Constant-first coefficients in [0, p), no trailing zeros (the zero
/// polynomial is empty).
using Coeffs = boost::container::small_vector<std::uint32_t, 16>;

bool is_prime(std::uint64_t n);
/// The i-th prime (0 -> 2, 1 -> 3, ...).
std::uint32_t nth_prime(std::size_t i);

Coeffs reduce(const IntPolynomial& f, std::uint32_t p);

/// Degrees of the irreducible factors of a monic f over F_p, ascending, or
/// nullopt when f mod p is not squarefree (or drops degree).
std::optional<std::vector<int>> factor_degrees(const Coeffs& f, std::uint32_t p);
std::optional<std::vector<int>> factor_degrees(const IntPolynomial& f, std::uint32_t p);

/// Roots of f in F_p by exhaustive evaluation.
std::vector<std::uint32_t> roots(const Coeffs& f, std::uint32_t p);

bool is_squarefree(const Coeffs& f, std::uint32_t p);

}  // namespace galcensus::modp
