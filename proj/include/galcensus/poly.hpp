#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galcensus/bigint.hpp"

namespace galcensus {

/// Univariate polynomial over Z. Stored constant-first; the text format and
/// leading_first() use the leading-to-constant order.
class IntPolynomial {
 public:
  IntPolynomial() : c_{BigInt(0)} {}

  static IntPolynomial from_constant_first(std::vector<BigInt> coeffs);
  static IntPolynomial from_leading_first(const std::vector<BigInt>& coeffs);
  /// X^n + a_1 X^{n-1} + ... + a_n from the tail (a_1, ..., a_n).
  static IntPolynomial monic_from_tail(const std::vector<long long>& tail);
  static IntPolynomial monomial(const BigInt& c, int degree);
  /// "1,0,-3,1" -> X^3 - 3X + 1.
  static IntPolynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && sgn(c_[0]) == 0; }
  bool is_monic() const { return c_.back() == 1; }
  const BigInt& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const BigInt& leading() const { return c_.back(); }
  const std::vector<BigInt>& constant_first() const { return c_; }
  std::vector<BigInt> leading_first() const { return {c_.rbegin(), c_.rend()}; }

  /// Comma-separated coefficients, leading first.
  std::string to_string() const;
  /// Human-readable form, e.g. "X^3 - 3*X + 1".
  std::string pretty() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  explicit IntPolynomial(std::vector<BigInt> c) : c_(std::move(c)) {}
  void normalize();

  std::vector<BigInt> c_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const BigInt& k, const IntPolynomial& a);

BigInt evaluate(const IntPolynomial& f, const BigInt& x);
IntPolynomial derivative(const IntPolynomial& f);
BigInt content(const IntPolynomial& f);
/// f / content(f), with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& f);
/// Exact quotient a / b over Z, or nullopt when b does not divide a in Z[X].
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
/// Yun decomposition of a primitive polynomial: f = prod g_i^{m_i}, each g_i
/// squarefree, pairwise coprime, positive leading coefficient.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& f);

/// Determinant of the Sylvester matrix.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);
/// (-1)^{n(n-1)/2} Res(f, f') / lc(f).
BigInt discriminant(const IntPolynomial& f);

/// Sorted integer roots of a nonzero polynomial, without multiplicity.
std::vector<BigInt> integer_roots(const IntPolynomial& f);

namespace detail {
// The two candidate routes behind integer_roots; exposed so tests can
// cross-check them against each other.
std::vector<BigInt> integer_roots_by_divisors(const IntPolynomial& g, const BigInt& limit);
std::vector<BigInt> integer_roots_by_lifting(const IntPolynomial& g);
}  // namespace detail

struct FactorPattern {
  std::vector<int> degrees;  // ascending
  bool has_linear = false;

  bool is_irreducible() const { return degrees.size() == 1; }
  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

/// Irreducible factors over Q of a monic polynomial, with multiplicities.
struct Factorization {
  std::vector<std::pair<IntPolynomial, int>> factors;

  FactorPattern pattern() const;
  IntPolynomial expand() const;
};

inline constexpr int kDefaultMaxFactorDegree = 10;

Factorization factorize(const IntPolynomial& f, int max_degree = kDefaultMaxFactorDegree);
FactorPattern factor_pattern(const IntPolynomial& f, int max_degree = kDefaultMaxFactorDegree);

namespace detail {
/// Monic degree-d factors of a squarefree monic g found by the bounded
/// coefficient grid (d == 2 only) and by certified root subsets.
std::optional<IntPolynomial> find_factor_grid(const IntPolynomial& g, int d);
std::optional<IntPolynomial> find_factor_root_subsets(const IntPolynomial& g, int d);
/// Degrees d in [1, deg g - 1] not excluded by mod-p factor degree patterns.
std::vector<int> possible_factor_degrees(const IntPolynomial& g, int prime_count);
}  // namespace detail

}  // namespace galcensus
