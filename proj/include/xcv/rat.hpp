#pragma once

// Exact rational scalars. Thin layer over GMP's C++ interface; everything
// downstream (Laurent polynomials, rational functions, matrices) is built
// on these so no floating point enters any algebraic computation.

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace xcv {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// num/den in canonical form (reduced, positive denominator). The raw
// two-argument mpq_class constructor does neither, so route every
// fraction-from-parts construction through here.
inline Rat rat_make(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rat_make: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// base^e for signed e; throws on 0^negative.
inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::domain_error("rat_pow: 1/0");
  unsigned long a = static_cast<unsigned long>(std::labs(e));
  Rat p = rat_make(int_pow(base.get_num(), a), int_pow(base.get_den(), a));
  if (e > 0) return p;
  return rat_make(p.get_den(), p.get_num());
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Accepts "a" or "a/b" with optional sign, base 10.
inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline int rat_sign(const Rat& q) { return sgn(q); }

}  // namespace xcv
