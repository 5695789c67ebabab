#ifndef DBR_RATIONAL_HPP
#define DBR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace dbr {

// Exact rational coefficients. All ring elements in this library carry
// mpq_class coefficients; nothing is ever rounded to floating point.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Exponent of p in a reduced rational; 0 for the zero element.
inline long p_adic_valuation(const Rational& r, long p) {
  if (r == 0) return 0;
  mpz_class tmp;
  long vn = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), r.get_num().get_mpz_t(), mpz_class(p).get_mpz_t()));
  long vd = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), r.get_den().get_mpz_t(), mpz_class(p).get_mpz_t()));
  return vn - vd;
}

// "a/b", or just "a" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

}  // namespace dbr

#endif
