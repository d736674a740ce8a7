#pragma once

#include <gmpxx.h>

#include <string>

namespace ppwb {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// b must divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

}  // namespace ppwb
