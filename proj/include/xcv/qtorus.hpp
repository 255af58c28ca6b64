#pragma once

// Quantum torus algebra attached to a seed: noncommutative Laurent
// polynomials in generators X_1..X_n over Z[q, q^-1], subject to
//
//   X_i X_j = q^{2 eps_ij} X_j X_i.
//
// Elements are stored in the Weyl (symmetric) normal form: the basis
// monomial X^a denotes
//
//   X^a := q^{-sum_{i<j} eps_ij a_i a_j} X_1^{a_1} ... X_n^{a_n},
//
// which multiplies by the single rule X^a X^b = q^{<a,b>} X^{a+b} with
// <a,b> = sum_{ij} eps_ij a_i b_j, and is fixed by the star involution.
// Star therefore acts coefficient-wise by q -> q^{-1}, and X^a X^{-a} = 1
// exactly, so monomials (and only monomials) invert inside the algebra.
// Setting q = 1 recovers the commutative Laurent ring of the same seed.

#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "rat.hpp"
#include "seed.hpp"

namespace xcv {

// Integer Laurent polynomial in the single quantization variable q.
struct QLaurent {
  std::map<int, Int> c;  // exponent -> nonzero coefficient

  QLaurent() = default;
  explicit QLaurent(const Int& constant) {
    if (constant != 0) c[0] = constant;
  }
  static QLaurent q_power(int e, const Int& coeff = 1) {
    QLaurent r;
    if (coeff != 0) r.c[e] = coeff;
    return r;
  }

  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c.begin()->first == 0 && c.begin()->second == 1; }
  // true when the value is a single signed power of q
  bool is_unit() const {
    return c.size() == 1 && (c.begin()->second == 1 || c.begin()->second == -1);
  }

  void add(int e, const Int& v) {
    if (v == 0) return;
    auto it = c.find(e);
    if (it == c.end()) {
      c.emplace(e, v);
      return;
    }
    it->second += v;
    if (it->second == 0) c.erase(it);
  }

  friend QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (auto& [e, v] : b.c) r.add(e, v);
    return r;
  }
  friend QLaurent operator-(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    for (auto& [e, v] : b.c) r.add(e, -v);
    return r;
  }
  friend QLaurent operator-(const QLaurent& a) {
    QLaurent r;
    for (auto& [e, v] : a.c) r.c.emplace(e, -v);
    return r;
  }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (auto& [ea, va] : a.c)
      for (auto& [eb, vb] : b.c) r.add(ea + eb, va * vb);
    return r;
  }
  // multiply by q^e
  QLaurent shifted(int e) const {
    QLaurent r;
    for (auto& [ee, v] : c) r.c.emplace(ee + e, v);
    return r;
  }
  bool operator==(const QLaurent& o) const { return c == o.c; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }

  // the star involution q -> q^{-1}
  QLaurent star() const {
    QLaurent r;
    for (auto& [e, v] : c) r.c.emplace(-e, v);
    return r;
  }

  Int at_one() const {
    Int s = 0;
    for (auto& [e, v] : c) s += v;
    return s;
  }

  std::string to_string(const std::string& var = "q") const {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, v] : c) {
      Int a = v;
      if (first) {
        if (a < 0) {
          out << "-";
          a = -a;
        }
      } else {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (e == 0) {
        out << a.get_str();
      } else {
        if (a != 1) out << a.get_str() << "*";
        out << var;
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }
};

// A quantum torus element: finite sum of Weyl-ordered monomials with
// QLaurent coefficients. The seed is shared by pointer; operations on
// elements of different seeds (by content) are refused.
struct QTorusElem {
  std::shared_ptr<const Seed> seed;
  std::map<Exp, QLaurent> terms;

  QTorusElem() = default;
  explicit QTorusElem(std::shared_ptr<const Seed> s) : seed(std::move(s)) {}

  int arity() const { return seed ? seed->size() : 0; }

  static QTorusElem zero(std::shared_ptr<const Seed> s) { return QTorusElem(std::move(s)); }
  static QTorusElem one(std::shared_ptr<const Seed> s) {
    return monomial(std::move(s), {}, QLaurent(Int(1)));
  }
  static QTorusElem constant(std::shared_ptr<const Seed> s, QLaurent c) {
    return monomial(std::move(s), {}, std::move(c));
  }
  static QTorusElem monomial(std::shared_ptr<const Seed> s, Exp a, QLaurent c) {
    QTorusElem r(std::move(s));
    a.resize(r.arity(), 0);
    if (!c.is_zero()) r.terms.emplace(std::move(a), std::move(c));
    return r;
  }
  static QTorusElem variable(std::shared_ptr<const Seed> s, int i, int e = 1) {
    QTorusElem r(std::move(s));
    if (i < 0 || i >= r.arity()) throw std::invalid_argument("QTorusElem: no such generator");
    Exp a(r.arity(), 0);
    a[i] = e;
    r.terms.emplace(std::move(a), QLaurent(Int(1)));
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_one() const {
    return terms.size() == 1 && terms.begin()->second.is_one() &&
           terms.begin()->first == Exp(arity(), 0);
  }
  bool is_monomial() const { return terms.size() == 1; }

  void add_term(const Exp& a, const QLaurent& c) {
    if (c.is_zero()) return;
    auto it = terms.find(a);
    if (it == terms.end()) {
      terms.emplace(a, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }

  void require_same_seed(const QTorusElem& o) const {
    if (!seed || !o.seed) throw std::invalid_argument("quantum torus element without a seed");
    if (seed == o.seed) return;
    if (!(*seed == *o.seed)) throw std::invalid_argument("quantum torus seed mismatch");
  }

  // <a,b> = sum eps_ij a_i b_j, the commutation pairing in Weyl form
  long pairing(const Exp& a, const Exp& b) const {
    long s = 0;
    int n = arity();
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n; ++j)
        if (seed->eps[i][j] != 0 && b[j] != 0)
          s += static_cast<long>(seed->eps[i][j]) * a[i] * b[j];
    }
    return s;
  }

  friend QTorusElem operator+(const QTorusElem& a, const QTorusElem& b) {
    a.require_same_seed(b);
    QTorusElem r = a;
    for (auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
  }
  friend QTorusElem operator-(const QTorusElem& a, const QTorusElem& b) {
    a.require_same_seed(b);
    QTorusElem r = a;
    for (auto& [e, c] : b.terms) r.add_term(e, -c);
    return r;
  }
  friend QTorusElem operator-(const QTorusElem& a) {
    QTorusElem r(a.seed);
    for (auto& [e, c] : a.terms) r.terms.emplace(e, -c);
    return r;
  }
  QTorusElem& operator+=(const QTorusElem& o) { return *this = *this + o; }
  QTorusElem& operator-=(const QTorusElem& o) { return *this = *this - o; }
  // X^a X^b = q^{<a,b>} X^{a+b}
  friend QTorusElem operator*(const QTorusElem& a, const QTorusElem& b) {
    a.require_same_seed(b);
    QTorusElem r(a.seed);
    int n = a.arity();
    for (auto& [ea, ca] : a.terms)
      for (auto& [eb, cb] : b.terms) {
        Exp e(n);
        for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, (ca * cb).shifted(static_cast<int>(a.pairing(ea, eb))));
      }
    return r;
  }

  bool operator==(const QTorusElem& o) const {
    require_same_seed(o);
    return terms == o.terms;
  }
  bool operator!=(const QTorusElem& o) const { return !(*this == o); }

  // star is an anti-automorphism fixing every generator; on Weyl monomials
  // it reduces to starring the coefficients.
  QTorusElem star() const {
    QTorusElem r(seed);
    for (auto& [e, c] : terms) r.terms.emplace(e, c.star());
    return r;
  }

  // integer powers; negative powers require a monomial
  QTorusElem pow(int e) const {
    if (e == 0) return one(seed);
    if (e < 0) {
      if (!is_monomial()) throw std::domain_error("QTorusElem: negative power of a non-monomial");
      auto& [a, c] = *terms.begin();
      if (!c.is_unit())
        throw std::domain_error("QTorusElem: negative power needs a unit coefficient");
      int n = arity();
      // (c q^m X^a)^{-1} = c q^{-m} X^{-a}; the Weyl pairing of a with -a
      // vanishes by skew symmetry, so no correction enters.
      Exp inv_a(n);
      for (int i = 0; i < n; ++i) inv_a[i] = -a[i];
      auto& [qe, qc] = *c.c.begin();
      QTorusElem base = monomial(seed, inv_a, QLaurent::q_power(-qe, qc));
      QTorusElem r = base;
      for (int k = 1; k < -e; ++k) r = r * base;
      return r;
    }
    QTorusElem r = *this;
    for (int k = 1; k < e; ++k) r = r * *this;
    return r;
  }

  // specialization q = 1 onto the commutative Laurent ring
  Laurent q1() const {
    Laurent r = Laurent::constant(arity(), Rat(0));
    for (auto& [e, c] : terms) r.add_term(e, Rat(c.at_one()));
    return r;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : terms) {
      if (!first) out << " + ";
      first = false;
      bool coeff_simple = c.c.size() == 1;
      std::string cs = c.to_string();
      bool printed = false;
      if (cs == "1") {
        // coefficient suppressed before a visible monomial
      } else if (coeff_simple) {
        out << cs;
        printed = true;
      } else {
        out << "(" << cs << ")";
        printed = true;
      }
      bool any = false;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed || any) out << "*";
        any = true;
        if (i < names.size())
          out << names[i];
        else
          out << "X" << i;
        if (e[i] != 1) out << "^" << e[i];
      }
      if (!any && !printed) out << "1";
    }
    return out.str();
  }
};

inline std::shared_ptr<const Seed> share_seed(Seed s) {
  return std::make_shared<const Seed>(std::move(s));
}

}  // namespace xcv
