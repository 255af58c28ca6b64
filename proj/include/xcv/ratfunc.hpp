#pragma once

// Rational functions in n commuting variables, kept in a canonical reduced
// form: numerator and denominator are integer-coefficient polynomials with
// no common factor (polynomial or monomial or integer), and the denominator
// has a positive lex-leading coefficient. Canonical form makes equality a
// structural comparison and serialization bit-exact.

#include <stdexcept>
#include <vector>

#include "laurent.hpp"
#include "poly_gcd.hpp"
#include "rat.hpp"

namespace xcv {

namespace detail {

inline IPoly to_ipoly(const Laurent& p) {
  IPoly r;
  for (auto& [m, c] : p.terms) {
    if (c.get_den() != 1) throw std::domain_error("to_ipoly: non-integer coefficient");
    r.emplace(m, c.get_num());
  }
  return r;
}

inline Laurent from_ipoly(int arity, const IPoly& p) {
  Laurent r(arity);
  for (auto& [m, c] : p) r.terms.emplace(m, Rat(c));
  return r;
}

}  // namespace detail

struct RatFunc {
  int arity = 0;
  Laurent num, den;

  RatFunc() = default;
  explicit RatFunc(int n) : arity(n), num(n), den(Laurent::constant(n, 1)) {}
  RatFunc(Laurent n_, Laurent d_) : arity(n_.arity), num(std::move(n_)), den(std::move(d_)) {
    if (num.arity != den.arity) throw std::invalid_argument("RatFunc: arity mismatch");
    normalize();
  }
  explicit RatFunc(const Laurent& n_) : RatFunc(n_, Laurent::constant(n_.arity, 1)) {}

  static RatFunc constant(int n, const Rat& c) {
    RatFunc r(n);
    r.num = Laurent::constant(n, c);
    r.den = Laurent::constant(n, 1);
    r.normalize();
    return r;
  }
  static RatFunc variable(int n, int i, int e = 1) {
    RatFunc r(n);
    r.num = Laurent::variable(n, i, e);
    r.den = Laurent::constant(n, 1);
    r.normalize();
    return r;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_one() const { return num == den; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num * b.num, a.den * b.den);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num * b.den, a.den * b.num);
  }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num = -r.num;
    return r;
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc pow(int e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("RatFunc::pow: 1/0");
      RatFunc inv(arity);
      inv.num = den;
      inv.den = num;
      inv.normalize();
      return inv.pow(-e);
    }
    RatFunc r = constant(arity, 1);
    RatFunc base = *this;
    for (int k = e; k > 0; k >>= 1) {
      if (k & 1) r *= base;
      if (k >> 1) base *= base;
    }
    return r;
  }

  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc partial(int i) const {
    return RatFunc(num.partial(i) * den - num * den.partial(i), den * den);
  }

  Rat eval(const std::vector<Rat>& x) const {
    Rat d = den.eval(x);
    if (d == 0) throw std::domain_error("RatFunc::eval: pole");
    return num.eval(x) / d;
  }

  // If the function is a Laurent polynomial (denominator reduces to a
  // monomial), return it; otherwise return nullopt-like flag via bool.
  bool as_laurent(Laurent& out) const {
    if (!den.is_monomial()) return false;
    auto& [m, c] = *den.terms.begin();
    Exp inv(arity);
    for (int i = 0; i < arity; ++i) inv[i] = -m[i];
    out = num.shifted(inv) * rat_pow(c, -1);
    return true;
  }

 private:
  void normalize() {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) {
      den = Laurent::constant(arity, 1);
      return;
    }
    // Shift both by a common monomial so each variable has minimum joint
    // exponent zero; afterwards num and den are honest polynomials with no
    // common monomial factor.
    Exp mn = num.min_exponents(), md = den.min_exponents();
    Exp shift(arity);
    for (int i = 0; i < arity; ++i) shift[i] = -std::min(mn[i], md[i]);
    num = num.shifted(shift);
    den = den.shifted(shift);

    // Clear rational coefficient denominators jointly.
    Int l = 1;
    for (auto& [m, c] : num.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (auto& [m, c] : den.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    if (l != 1) {
      num *= Rat(l);
      den *= Rat(l);
    }

    // The recursive gcd bottoms out at integer gcd, so it already carries
    // the joint integer content along with any polynomial factor.
    IPoly in = detail::to_ipoly(num), id = detail::to_ipoly(den);
    IPoly g = ipoly_gcd(in, id);
    in = ipoly_divexact(in, g);
    id = ipoly_divexact(id, g);
    if (id.rbegin()->second < 0) {
      in = detail::ipoly_scale(std::move(in), Int(-1));
      id = detail::ipoly_scale(std::move(id), Int(-1));
    }
    num = detail::from_ipoly(arity, in);
    den = detail::from_ipoly(arity, id);
  }
};

}  // namespace xcv
