#pragma once

#include <complex>
#include <vector>

#include "galcensus/mpreal.hpp"
#include "galcensus/poly.hpp"

namespace galcensus {

/// Approximations of all complex roots of f (with multiplicity) and a
/// certified radius: under a suitable matching every true root lies within
/// error_radius of its approximation.
struct RootSet {
  std::vector<Complex> roots;
  long double error_radius = 0;
  int precision_bits = 0;
};

/// (2^{1/n} - 1)^{-1} * max_k |a_k / (a_0 C(n,k))|^{1/k} for
/// f = a_0 X^n + a_1 X^{n-1} + ... + a_n, rounded upward.
double root_bound(const IntPolynomial& f);

struct RootOptions {
  int initial_bits = 128;
  int max_bits = 4096;
};

/// Simultaneous (Aberth) iteration started on the root-bound circle; the
/// precision doubles until the inclusion-disk certificate reaches
/// target_error. Throws PrecisionExhausted past max_bits.
RootSet complex_roots(const IntPolynomial& f, long double target_error, const RootOptions& options = {});

/// Uncertified long double approximations (no error bound); used only for
/// planning precision.
std::vector<std::complex<long double>> approximate_roots(const IntPolynomial& f);

}  // namespace galcensus
