#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace diracops {

// Exact rational scalar. mpq_class keeps fractions in canonical reduced
// form (gcd 1, positive denominator).
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline Scalar factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Scalar(z);
}

inline Scalar binomial(unsigned n, unsigned k) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Scalar(z);
}

inline Scalar pow2(unsigned k) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, k);
  return Scalar(z);
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

}  // namespace diracops
