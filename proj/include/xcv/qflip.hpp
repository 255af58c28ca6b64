#pragma once

// Quantum mutations and the quantum flip, kept in unexpanded form.
//
// A mutation image is a word: an ordered product of factors F^(+-1) where
// each factor base is a quantum torus element (qtorus.hpp). Words are never
// multiplied out through inverted sums; the only rewrites are dropping unit
// factors, merging adjacent monomial factors, and cancelling an adjacent
// factor/inverse pair. This is enough to state the flip formulas, compose
// monomial substitutions, specialize q = 1, and certify the two-mutation
// identities symbolically; everything deeper is checked in representations.
//
// quantum_mutation(s, k) sends, writing a = |eps_ik| and X = X_k,
//
//   X_i  ->  X_i (1+qX)(1+q^3 X)...(1+q^{2a-1}X)          when eps_ik <= 0,
//   X_i  ->  X_i [(1+qX^-1)...(1+q^{2a-1}X^-1)]^{-1}       when eps_ik > 0,
//   X_k  ->  X_k^{-1},
//
// with the inverted product emitted factor-by-factor in reverse order so
// that mutating twice cancels literally. Setting q = 1 recovers the
// classical exchange rule. quantum_flip_closed_form writes the flip
// (the composite of mutations at Z, W, X, Y on the quadrilateral around an
// edge) in closed form, one word per coordinate.

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flip.hpp"
#include "qtorus.hpp"
#include "ratfunc.hpp"
#include "seed.hpp"
#include "triangulation.hpp"

namespace xcv {

struct QFactor {
  QTorusElem base;
  int exp = 1;  // +1 or -1

  bool operator==(const QFactor& o) const { return exp == o.exp && base == o.base; }
};

struct QWord {
  std::shared_ptr<const Seed> seed;
  std::vector<QFactor> factors;

  QWord() = default;
  explicit QWord(std::shared_ptr<const Seed> s) : seed(std::move(s)) {}

  static QWord one(std::shared_ptr<const Seed> s) { return QWord(std::move(s)); }
  static QWord from_elem(QTorusElem e, int exp = 1) {
    QWord w(e.seed);
    w.push(std::move(e), exp);
    return w;
  }

  void push(QTorusElem base, int exp = 1) {
    if (exp != 1 && exp != -1) throw std::invalid_argument("QWord: factor exponent must be +-1");
    if (base.is_zero()) throw std::invalid_argument("QWord: zero factor");
    factors.push_back(QFactor{std::move(base), exp});
  }
  void append(const QWord& w) {
    for (const QFactor& f : w.factors) factors.push_back(f);
  }

  QWord inverse() const {
    QWord r(seed);
    r.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      r.factors.push_back(QFactor{it->base, -it->exp});
    return r;
  }

  // anti-automorphism: reverse the factor order and star each base
  QWord star() const {
    QWord r(seed);
    r.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      r.factors.push_back(QFactor{it->base.star(), it->exp});
    return r;
  }

  // Normal form: monomial factors are inverted in place and merged with
  // monomial neighbours, unit factors are dropped, and adjacent mutually
  // inverse factors cancel. Repeats until stable.
  void simplify() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<QFactor> out;
      out.reserve(factors.size());
      for (QFactor& f : factors) {
        if (f.exp == -1 && f.base.is_monomial() && f.base.terms.begin()->second.is_unit()) {
          f = QFactor{f.base.pow(-1), 1};
          changed = true;
        }
        if (f.base.is_one()) {
          changed = true;
          continue;
        }
        if (!out.empty()) {
          QFactor& prev = out.back();
          if (prev.exp == 1 && f.exp == 1 && prev.base.is_monomial() && f.base.is_monomial()) {
            prev.base = prev.base * f.base;
            if (prev.base.is_one()) out.pop_back();
            changed = true;
            continue;
          }
          if (prev.exp == -f.exp && prev.base == f.base) {
            out.pop_back();
            changed = true;
            continue;
          }
        }
        out.push_back(std::move(f));
      }
      factors = std::move(out);
    }
  }

  QWord simplified() const {
    QWord r = *this;
    r.simplify();
    return r;
  }

  bool operator==(const QWord& o) const {
    QWord a = simplified(), b = o.simplified();
    return a.factors == b.factors;
  }
  bool operator!=(const QWord& o) const { return !(*this == o); }

  // single monomial value, when the word reduces to one
  std::optional<QTorusElem> try_monomial() const {
    QWord s = simplified();
    if (s.factors.empty()) return QTorusElem::one(seed);
    if (s.factors.size() == 1 && s.factors[0].exp == 1 && s.factors[0].base.is_monomial())
      return s.factors[0].base;
    return std::nullopt;
  }

  // multiply out; only monomial factors may carry exponent -1
  QTorusElem expand() const {
    QTorusElem r = QTorusElem::one(seed);
    for (const QFactor& f : factors) {
      if (f.exp == 1)
        r = r * f.base;
      else if (f.base.is_monomial())
        r = r * f.base.pow(-1);
      else
        throw std::domain_error("QWord: cannot expand an inverted sum");
    }
    return r;
  }

  RatFunc q1() const {
    int n = seed ? seed->size() : 0;
    RatFunc r = RatFunc::constant(n, 1);
    for (const QFactor& f : factors) {
      RatFunc b{f.base.q1()};
      r = f.exp == 1 ? r * b : r / b;
    }
    return r;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (factors.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const QFactor& f : factors) {
      if (!first) out << " * ";
      first = false;
      bool bare = f.base.is_monomial() && f.exp == 1;
      if (bare)
        out << f.base.to_string(names);
      else
        out << "(" << f.base.to_string(names) << ")";
      if (f.exp == -1) out << "^-1";
    }
    return out.str();
  }
};

// Images of target coordinates as words over the source quantum torus.
struct QRationalMap {
  std::shared_ptr<const Seed> source, target;
  std::vector<QWord> images;

  static QRationalMap identity(std::shared_ptr<const Seed> s) {
    QRationalMap m{s, s, {}};
    m.images.reserve(s->size());
    for (int i = 0; i < s->size(); ++i)
      m.images.push_back(QWord::from_elem(QTorusElem::variable(s, i)));
    return m;
  }
};

namespace detail {

// Image of the Weyl monomial X^a under a map whose relevant coordinate
// images are all monomials. Unfolds the Weyl normal form over the middle
// seed and substitutes left to right.
inline QTorusElem q_monomial_image(const QRationalMap& f, const Exp& a, const QLaurent& coeff) {
  const Seed& mid = *f.target;
  int n = mid.size();
  long unfold = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i] != 0 && a[j] != 0) unfold -= static_cast<long>(mid.eps[i][j]) * a[i] * a[j];
  QTorusElem r = QTorusElem::constant(f.source, coeff.shifted(static_cast<int>(unfold)));
  for (int j = 0; j < n; ++j) {
    if (a[j] == 0) continue;
    auto m = f.images[j].try_monomial();
    if (!m) throw std::domain_error("compose_on_monomials: non-monomial image inside a sum");
    r = r * m->pow(a[j]);
  }
  return r;
}

// Image of a single-monomial factor base. At most one variable with a
// non-monomial image may occur; it is split off to the right, with the
// Weyl commutation factor that the split introduces.
inline QWord q_word_image(const QRationalMap& f, const Exp& a, const QLaurent& coeff) {
  const Seed& mid = *f.target;
  int n = mid.size();
  int hard = -1;
  for (int j = 0; j < n; ++j)
    if (a[j] != 0 && !f.images[j].try_monomial()) {
      if (hard >= 0)
        throw std::domain_error("compose_on_monomials: two non-monomial images in one monomial");
      hard = j;
    }
  if (hard < 0) {
    QWord w(f.source);
    w.push(q_monomial_image(f, a, coeff));
    return w;
  }
  int t = a[hard];
  Exp rest = a;
  rest[hard] = 0;
  // X^a = q^{-<rest, t e_hard>} X^rest X_hard^t over the middle seed
  long cross = 0;
  for (int i = 0; i < n; ++i)
    if (rest[i] != 0) cross -= static_cast<long>(mid.eps[i][hard]) * rest[i] * t;
  QWord w(f.source);
  w.push(q_monomial_image(f, rest, coeff.shifted(static_cast<int>(cross))));
  const QWord& img = f.images[hard];
  const QWord inv = img.inverse();
  for (int rep = 0; rep < (t > 0 ? t : -t); ++rep) w.append(t > 0 ? img : inv);
  return w;
}

}  // namespace detail

// first, then second (result maps second.target coordinates into words over
// first.source). Substitution stays at the word level: sums may only contain
// monomial-image variables, single monomials may also involve one coordinate
// with a word image.
inline QRationalMap compose_on_monomials(const QRationalMap& first, const QRationalMap& second) {
  if (!(first.target == second.source || *first.target == *second.source))
    throw std::invalid_argument("compose_on_monomials: middle seeds do not match");
  QRationalMap r{first.source, second.target, {}};
  r.images.reserve(second.images.size());
  for (const QWord& w : second.images) {
    QWord out(first.source);
    for (const QFactor& f : w.factors) {
      if (f.base.is_monomial()) {
        auto& [a, c] = *f.base.terms.begin();
        QWord piece = detail::q_word_image(first, a, c);
        if (f.exp == -1) piece = piece.inverse();
        out.append(piece);
      } else {
        QTorusElem img(first.source);
        for (auto& [a, c] : f.base.terms) img += detail::q_monomial_image(first, a, c);
        out.push(std::move(img), f.exp);
      }
    }
    out.simplify();
    r.images.push_back(std::move(out));
  }
  return r;
}

namespace detail {

inline QTorusElem q_binom(const std::shared_ptr<const Seed>& s, int qe, int var, int var_exp) {
  Exp a(s->size(), 0);
  a[var] = var_exp;
  return QTorusElem::one(s) + QTorusElem::monomial(s, std::move(a), QLaurent::q_power(qe));
}

}  // namespace detail

inline QRationalMap quantum_mutation(const Seed& s, int k) {
  int n = s.size();
  if (k < 0 || k >= n) throw std::invalid_argument("quantum_mutation: no such vertex");
  auto src = share_seed(s);
  auto dst = share_seed(mutate_epsilon(s, k));
  QRationalMap m{src, dst, {}};
  m.images.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      m.images.push_back(QWord::from_elem(QTorusElem::variable(src, k, -1)));
      continue;
    }
    QWord w = QWord::from_elem(QTorusElem::variable(src, i));
    int e = s.eps[i][k];
    if (e < 0) {
      for (int j = 1; j <= -e; ++j) w.push(detail::q_binom(src, 2 * j - 1, k, 1));
    } else if (e > 0) {
      for (int j = e; j >= 1; --j) w.push(detail::q_binom(src, 2 * j - 1, k, -1), -1);
    }
    m.images.push_back(std::move(w));
  }
  return m;
}

struct QFlipResult {
  Triangulation tri;  // after the flip
  QRationalMap map;   // new coordinates as words in the old ones
};

namespace detail {

// The closed-form words need every coordinate around the quadrilateral to
// be a distinct marked point (absent side points are fine: their formulas
// are simply skipped, as in the classical closed form). Self-identified
// sides are refused; representation-level code handles those through the
// four-mutation route instead.
inline void q_check_slots(const QuadSlots& q) {
  if (q.X < 0 || q.Y < 0 || q.Z < 0 || q.W < 0)
    throw std::invalid_argument("quantum flip: missing diagonal or center coordinate");
  int slots[12] = {q.A, q.B, q.C, q.D, q.E, q.F, q.G, q.H, q.X, q.Y, q.Z, q.W};
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (slots[i] >= 0 && slots[i] == slots[j])
        throw std::invalid_argument("quantum flip: quadrilateral coordinates must be distinct");
}

// sum 1 + q^{s1} V1 + q^{s2} V2 V1 + q^{s3} V3 V2 V1 read right to left;
// callers pass the factors outermost first, e.g. (s3, V3)(s2, V2)(s1, V1).
inline QTorusElem q_flip_sum(const std::shared_ptr<const Seed>& s,
                             std::initializer_list<std::pair<int, int>> shifts_vars) {
  QTorusElem r = QTorusElem::one(s);
  std::vector<std::pair<int, int>> sv(shifts_vars);
  for (size_t len = 1; len <= sv.size(); ++len) {
    QTorusElem term = QTorusElem::constant(s, QLaurent::q_power(sv[sv.size() - len].first));
    for (size_t i = sv.size() - len; i < sv.size(); ++i)
      term = term * QTorusElem::variable(s, sv[i].second);
    r += term;
  }
  return r;
}

}  // namespace detail

// The flip across an internal edge as twelve closed-form words over the
// source torus (identity on every other coordinate). Requires the twelve
// quadrilateral coordinates to be pairwise distinct marked points, which
// rules out self-identified sides; representation-level code handles those
// through the four-mutation route instead.
inline QFlipResult quantum_flip_closed_form(const Triangulation& tri, int e) {
  QuadSlots q = quad_slots(tri, e);
  detail::q_check_slots(q);

  auto src = share_seed(epsilon_of_triangulation(tri));
  Triangulation new_tri = detail::flipped_triangulation(tri, e, q);
  auto dst = share_seed(epsilon_of_triangulation(new_tri));

  auto var = [&](int i) { return QTorusElem::variable(src, i); };
  auto binp = [&](int i) { return detail::q_binom(src, 1, i, 1); };    // 1 + q X_i
  auto binm = [&](int i) { return detail::q_binom(src, 1, i, -1); };   // 1 + q X_i^-1

  // 1 + qZ + q^2 ZX + q^3 ZXW and 1 + qW + q^2 WY + q^3 WYZ
  QTorusElem pz = detail::q_flip_sum(src, {{3, q.W}, {2, q.X}, {1, q.Z}});
  QTorusElem rw = detail::q_flip_sum(src, {{3, q.Z}, {2, q.Y}, {1, q.W}});
  // 1 + q^-1 Z + q^-2 XZ + q^-3 WXZ and 1 + q^-1 W + q^-2 YW + q^-3 ZYW
  QTorusElem bz = detail::q_flip_sum(src, {{-3, q.W}, {-2, q.X}, {-1, q.Z}});
  QTorusElem bw = detail::q_flip_sum(src, {{-3, q.Z}, {-2, q.Y}, {-1, q.W}});

  QRationalMap m{src, dst, {}};
  m.images.reserve(src->size());
  for (int i = 0; i < src->size(); ++i) m.images.push_back(QWord::from_elem(var(i)));

  auto word = [&](int slot) -> QWord& { return m.images[slot]; };

  // side coordinates
  if (q.A >= 0) word(q.A).push(binp(q.Z));
  if (q.B >= 0) {
    word(q.B).push(binp(q.Z), -1);
    word(q.B).push(pz);
  }
  if (q.C >= 0) {
    word(q.C) = QWord::from_elem(var(q.C) * var(q.Z) * var(q.X));
    word(q.C).push(binp(q.W));
    word(q.C).push(bz, -1);
  }
  if (q.D >= 0) word(q.D).push(binm(q.W), -1);
  if (q.E >= 0) word(q.E).push(binp(q.W));
  if (q.F >= 0) {
    word(q.F).push(binp(q.W), -1);
    word(q.F).push(rw);
  }
  if (q.G >= 0) {
    word(q.G) = QWord::from_elem(var(q.G) * var(q.W) * var(q.Y));
    word(q.G).push(binp(q.Z));
    word(q.G).push(bw, -1);
  }
  if (q.H >= 0) word(q.H).push(binm(q.Z), -1);

  // new diagonal coordinates live at the old diagonal slots
  word(q.Z) = QWord::one(src);
  word(q.Z).push(binp(q.W), -1);
  word(q.Z).push(binm(q.Z));
  word(q.Z).push(var(q.X).pow(-1));
  word(q.W) = QWord::one(src);
  word(q.W).push(binm(q.W));
  word(q.W).push(binp(q.Z), -1);
  word(q.W).push(var(q.Y).pow(-1));

  // new triangle centers trade places across the new diagonal
  word(q.Y) = QWord::from_elem(var(q.X));
  word(q.Y).push(binp(q.W));
  word(q.Y).push(bz, -1);
  word(q.Y).push(binp(q.W), -1);
  word(q.Y).push(rw);
  word(q.X) = QWord::from_elem(var(q.W).pow(-1));
  word(q.X).push(binp(q.Z), -1);
  word(q.X).push(pz);
  word(q.X).push(var(q.W) * var(q.Y));
  word(q.X).push(binp(q.Z));
  word(q.X).push(bw, -1);

  for (QWord& w : m.images) w.simplify();
  return QFlipResult{std::move(new_tri), std::move(m)};
}

// The state after the first two mutations (at Z, then W) of the flip at e,
// as closed-form words: the halfway point of the four-mutation route.
inline QRationalMap quantum_flip_intermediate(const Triangulation& tri, int e) {
  QuadSlots q = quad_slots(tri, e);
  detail::q_check_slots(q);

  Seed s0 = epsilon_of_triangulation(tri);
  auto src = share_seed(s0);
  auto dst = share_seed(mutate_epsilon(mutate_epsilon(s0, q.Z), q.W));

  auto var = [&](int i) { return QTorusElem::variable(src, i); };
  auto binp = [&](int i) { return detail::q_binom(src, 1, i, 1); };
  auto binm = [&](int i) { return detail::q_binom(src, 1, i, -1); };

  QRationalMap m{src, dst, {}};
  m.images.reserve(src->size());
  for (int i = 0; i < src->size(); ++i) m.images.push_back(QWord::from_elem(var(i)));

  auto word = [&](int slot) -> QWord& { return m.images[slot]; };

  if (q.A >= 0) word(q.A).push(binp(q.Z));
  if (q.D >= 0) word(q.D).push(binm(q.W), -1);
  if (q.E >= 0) word(q.E).push(binp(q.W));
  if (q.H >= 0) word(q.H).push(binm(q.Z), -1);
  word(q.X).push(binm(q.Z), -1);
  word(q.X).push(binp(q.W));
  word(q.Y).push(binp(q.Z));
  word(q.Y).push(binm(q.W), -1);
  word(q.Z) = QWord::from_elem(var(q.Z).pow(-1));
  word(q.W) = QWord::from_elem(var(q.W).pow(-1));

  for (QWord& w : m.images) w.simplify();
  return m;
}

}  // namespace xcv
