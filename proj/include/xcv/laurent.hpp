#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients.
// Exponent vectors have a fixed arity per expression; the variable names
// live outside (in the seed or torus that owns the expression), so the same
// machinery serves cluster seeds, monodromy matrix entries and q=1
// specializations of quantum torus elements.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "rat.hpp"

namespace xcv {

using Exp = std::vector<int>;  // one exponent per variable, may be negative

struct Laurent {
  int arity = 0;
  std::map<Exp, Rat> terms;  // invariant: no zero coefficients stored

  Laurent() = default;
  explicit Laurent(int n) : arity(n) {}

  static Laurent constant(int n, const Rat& c) {
    Laurent r(n);
    if (c != 0) r.terms.emplace(Exp(n, 0), c);
    return r;
  }
  static Laurent variable(int n, int i, int e = 1) {
    Laurent r(n);
    Exp m(n, 0);
    m.at(i) = e;
    r.terms.emplace(std::move(m), Rat(1));
    return r;
  }
  static Laurent monomial(int n, const Exp& m, const Rat& c) {
    Laurent r(n);
    if (c != 0) r.terms.emplace(m, c);
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == Exp(arity, 0));
  }
  bool is_monomial() const { return terms.size() == 1; }

  // True if every exponent is >= 0 (a genuine polynomial).
  bool is_polynomial() const {
    for (auto& [m, c] : terms)
      for (int e : m)
        if (e < 0) return false;
    return true;
  }

  void add_term(const Exp& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    check_arity(o);
    for (auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    check_arity(o);
    for (auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r(a.arity);
    for (auto& [m, c] : a.terms) r.terms.emplace(m, -c);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_arity(b);
    Laurent r(a.arity);
    Exp m(a.arity);
    for (auto& [ma, ca] : a.terms)
      for (auto& [mb, cb] : b.terms) {
        for (int i = 0; i < a.arity; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent& operator*=(const Rat& c) {
    if (c == 0) {
      terms.clear();
    } else {
      for (auto& [m, v] : terms) v *= c;
    }
    return *this;
  }
  friend Laurent operator*(Laurent a, const Rat& c) { return a *= c; }
  friend Laurent operator*(const Rat& c, Laurent a) { return a *= c; }

  Laurent pow(int e) const {
    if (e < 0) {
      if (!is_monomial()) throw std::domain_error("Laurent::pow: negative power of non-monomial");
      const auto& [m, c] = *terms.begin();
      Exp im(arity);
      for (int i = 0; i < arity; ++i) im[i] = -m[i];
      return monomial(arity, im, rat_pow(c, -1)).pow(-e);
    }
    Laurent r = constant(arity, 1);
    Laurent base = *this;
    for (int k = e; k > 0; k >>= 1) {
      if (k & 1) r *= base;
      base = (k >> 1) ? base * base : base;
    }
    return r;
  }

  bool operator==(const Laurent& o) const { return arity == o.arity && terms == o.terms; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // Componentwise minimum exponent over all terms (0 for the zero polynomial).
  Exp min_exponents() const {
    Exp lo(arity, 0);
    bool first = true;
    for (auto& [m, c] : terms) {
      if (first) {
        lo = m;
        first = false;
      } else {
        for (int i = 0; i < arity; ++i) lo[i] = std::min(lo[i], m[i]);
      }
    }
    return lo;
  }

  // Multiply by the monomial x^shift.
  Laurent shifted(const Exp& shift) const {
    Laurent r(arity);
    Exp m(arity);
    for (auto& [ma, c] : terms) {
      for (int i = 0; i < arity; ++i) m[i] = ma[i] + shift[i];
      r.terms.emplace(m, c);
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != arity) throw std::invalid_argument("Laurent::eval: arity");
    Rat acc(0);
    for (auto& [m, c] : terms) {
      Rat t = c;
      for (int i = 0; i < arity; ++i)
        if (m[i] != 0) t *= rat_pow(x[i], m[i]);
      acc += t;
    }
    return acc;
  }

  Laurent partial(int i) const {
    if (i < 0 || i >= arity) throw std::invalid_argument("Laurent::partial: bad variable");
    Laurent out(arity);
    for (auto& [m, c] : terms) {
      if (m[i] == 0) continue;
      Exp e = m;
      e[i] -= 1;
      out.add_term(e, c * m[i]);
    }
    return out;
  }

  // All coefficients strictly positive (and the polynomial nonzero).
  bool all_coeffs_positive() const {
    if (terms.empty()) return false;
    for (auto& [m, c] : terms)
      if (c <= 0) return false;
    return true;
  }
  bool all_coeffs_integer() const {
    for (auto& [m, c] : terms)
      if (c.get_den() != 1) return false;
    return true;
  }

 private:
  void check_arity(const Laurent& o) const {
    if (arity != o.arity) throw std::invalid_argument("Laurent: arity mismatch");
  }
};

}  // namespace xcv
