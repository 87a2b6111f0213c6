#pragma once
// Arbitrary-precision integer/rational aliases plus the shared error taxonomy.
// Error classes map onto CLI exit codes: capacity 2, constraint violation 3, bad input 4.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hcs {

using Int = mpz_class;
using Rat = mpq_class;

// A value is representable in principle but too large for this build's limits.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural precondition (schedule shape, lemma hypothesis) is violated.
struct ConstraintError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed argument: bad index, bad symbol, bad range.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ceil(a/b) for a >= 0, b > 0, computed as (a + b - 1) div b.
inline Int ceil_div(const Int& a, const Int& b) {
  if (b <= 0) throw InputError("ceil_div: divisor must be positive");
  if (a < 0) throw InputError("ceil_div: dividend must be nonnegative");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Default ceiling on the bit size of any single computed integer (~8 MiB of limbs).
inline constexpr unsigned long kDefaultBitCap = 1ul << 26;

// 2^e with a capacity guard; e must be a nonnegative integer small enough to store.
inline Int pow2(const Int& e, unsigned long bit_cap = kDefaultBitCap) {
  if (e < 0) throw InputError("pow2: negative exponent");
  if (!e.fits_ulong_p() || e.get_ui() > bit_cap)
    throw CapacityError("pow2: exponent " + e.get_str() + " exceeds bit cap " +
                        std::to_string(bit_cap));
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e.get_ui());
  return r;
}

// Number of bits in |v|; 0 for v = 0.
inline unsigned long bit_length(const Int& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

// Exact log2 when v is a power of two, else nullopt.
inline std::optional<unsigned long> log2_exact(const Int& v) {
  if (v <= 0) return std::nullopt;
  unsigned long bits = bit_length(v);
  Int check;
  mpz_ui_pow_ui(check.get_mpz_t(), 2, bits - 1);
  if (check == v) return bits - 1;
  return std::nullopt;
}

// Number of decimal digits of |v| (exact; 1 for v = 0).
inline unsigned long decimal_digits(const Int& v) {
  if (v == 0) return 1;
  // mpz_sizeinbase may overshoot by one for base 10; correct by comparison.
  unsigned long est = mpz_sizeinbase(v.get_mpz_t(), 10);
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, est - 1);
  Int a = abs(v);
  return a >= p ? est : est - 1;
}

// Checked narrowing for loop bounds and window sizes.
inline unsigned long to_ulong(const Int& v, const char* what = "value") {
  if (v < 0 || !v.fits_ulong_p())
    throw CapacityError(std::string(what) + " does not fit a machine word: " + v.get_str());
  return v.get_ui();
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InputError("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hcs
