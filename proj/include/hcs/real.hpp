#pragma once
// Thin RAII wrapper over MPFR for the decimal renderings of exact-coefficient bounds.
// All rounding is to-nearest; precision is carried per value in bits.

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "hcs/bigint.hpp"

namespace hcs {

class Real {
 public:
  // Bits needed for `digits` significant decimal digits, plus guard bits.
  static mpfr_prec_t bits_for_digits(int digits) {
    if (digits < 1) throw InputError("precision must be at least 1 digit");
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 0.5) + 32;
  }

  explicit Real(mpfr_prec_t bits = 192) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  static Real of(const Int& z, mpfr_prec_t bits) {
    Real r(bits); mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN); return r;
  }
  static Real of(const Rat& q, mpfr_prec_t bits) {
    Real r(bits); mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN); return r;
  }
  static Real of_long(long x, mpfr_prec_t bits) {
    Real r(bits); mpfr_set_si(r.v_, x, MPFR_RNDN); return r;
  }

  static Real ln(const Int& z, mpfr_prec_t bits) {
    if (z <= 0) throw InputError("ln: argument must be positive");
    Real r = of(z, bits); mpfr_log(r.v_, r.v_, MPFR_RNDN); return r;
  }
  static Real ln(const Rat& q, mpfr_prec_t bits) {
    if (q <= 0) throw InputError("ln: argument must be positive");
    Real r = of(q, bits); mpfr_log(r.v_, r.v_, MPFR_RNDN); return r;
  }
  Real ln() const {
    if (mpfr_sgn(v_) <= 0) throw InputError("ln: argument must be positive");
    Real r(prec()); mpfr_log(r.v_, v_, MPFR_RNDN); return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec())); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec())); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec())); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec())); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  friend Real operator*(const Rat& q, const Real& b) { return Real::of(q, b.prec()) * b; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  // Scientific-notation rendering with `digits` significant decimal digits.
  std::string to_string(int digits) const {
    if (digits < 1) throw InputError("to_string: digits must be >= 1");
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

}  // namespace hcs
