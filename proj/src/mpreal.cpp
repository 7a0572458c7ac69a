#include "galcensus/mpreal.hpp"

#include <vector>

namespace galcensus {

long double Real::abs_upper() const {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(v_));
  mpfr_abs(t, v_, MPFR_RNDN);
  long double r = mpfr_get_ld(t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

BigInt Real::round_to_integer() const {
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real hypot(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

namespace {

// Scratch value reused across calls; reallocated only on a precision change.
mpfr_ptr scratch(mpfr_prec_t bits) {
  thread_local Real t(64);
  if (t.precision() != bits) t = Real(bits);
  return t.raw();
}

}  // namespace

Complex& Complex::operator*=(const Complex& o) {
  // (a+bi)(c+di) = (ac-bd) + (ad+bc)i, each part rounded once
  const mpfr_prec_t bits = std::max(precision(), o.precision());
  if (re.precision() < bits) {
    mpfr_prec_round(re.raw(), bits, MPFR_RNDN);
    mpfr_prec_round(im.raw(), bits, MPFR_RNDN);
  }
  mpfr_ptr t = scratch(bits);
  mpfr_fmma(t, re.raw(), o.im.raw(), im.raw(), o.re.raw(), MPFR_RNDN);
  mpfr_fmms(re.raw(), re.raw(), o.re.raw(), im.raw(), o.im.raw(), MPFR_RNDN);
  mpfr_set(im.raw(), t, MPFR_RNDN);
  return *this;
}

Complex operator/(const Complex& a, const Complex& b) {
  const mpfr_prec_t bits = std::max(a.precision(), b.precision());
  Complex r(bits);
  mpfr_ptr den = scratch(bits);
  mpfr_fmma(den, b.re.raw(), b.re.raw(), b.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_fmma(r.re.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_fmms(r.im.raw(), a.im.raw(), b.re.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_div(r.re.raw(), r.re.raw(), den, MPFR_RNDN);
  mpfr_div(r.im.raw(), r.im.raw(), den, MPFR_RNDN);
  return r;
}

long double Complex::abs_upper() const {
  Real h = hypot(re, im);
  return mpfr_get_ld(h.raw(), MPFR_RNDU) * (1.0L + 1e-15L);
}

long double to_long_double(const BigInt& z) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_z(t, z.get_mpz_t(), MPFR_RNDN);
  long double r = mpfr_get_ld(t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}

long double abs_upper(const BigInt& z) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_z(t, z.get_mpz_t(), MPFR_RNDA);
  mpfr_abs(t, t, MPFR_RNDU);
  long double r = mpfr_get_ld(t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Complex with_precision(const Complex& z, mpfr_prec_t bits) {
  Complex r(bits);
  mpfr_set(r.re.raw(), z.re.raw(), MPFR_RNDN);
  mpfr_set(r.im.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

}  // namespace galcensus
