#pragma once

// Exact projective geometry in the rational projective plane: points, lines,
// flags, the cross-ratio of collinear points or concurrent lines, the triple
// ratio of a flag triple, and chart-based convexity tests. The scalar-level
// routines are templated so the same formulas run over rational functions
// for symbolic identities.
//
// Conventions: the cross-ratio of x1,x2,x3,x4 is the value at x4 of the
// projective coordinate taking infinity at x1, -1 at x2 and 0 at x3, i.e.
// (x1-x2)(x3-x4) / ((x1-x4)(x2-x3)). The triple ratio of flags
// (A,a),(B,b),(C,c) is a(B)b(C)c(A) / (a(C)b(A)c(B)), invariant under cyclic
// shifts and projective transformations, and equal to the cross-ratio of the
// line quadruple a, AB, A(b cap c), AC in the pencil at A.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "xcv/linear3.hpp"
#include "xcv/rat.hpp"

namespace xcv {

namespace detail {

// Scale a rational triple to coprime integers with the first nonzero entry
// positive. Projectively a no-op; keeps coordinates small in deep
// constructions.
inline void normalize_triple(Triple<Rat>& v) {
  mpz_class l = 1;
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class g = 0;
  std::array<mpz_class, 3> ints;
  for (int i = 0; i < 3; ++i) {
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return;  // all zero; caller rejects
  int lead = 0;
  while (ints[lead] == 0) ++lead;
  if (ints[lead] < 0) g = -g;
  for (int i = 0; i < 3; ++i) v[i] = Rat(ints[i] / g);
}

}  // namespace detail

struct ProjPoint {
  Triple<Rat> h{Rat(0), Rat(0), Rat(0)};

  ProjPoint() = default;
  explicit ProjPoint(Triple<Rat> coords) : h(std::move(coords)) {
    if (triple_is_zero(h)) throw std::invalid_argument("projective point: zero triple");
    detail::normalize_triple(h);
  }
  ProjPoint(Rat x, Rat y, Rat z) : ProjPoint(Triple<Rat>{std::move(x), std::move(y), std::move(z)}) {}
};

struct ProjLine {
  Triple<Rat> h{Rat(0), Rat(0), Rat(0)};

  ProjLine() = default;
  explicit ProjLine(Triple<Rat> coeffs) : h(std::move(coeffs)) {
    if (triple_is_zero(h)) throw std::invalid_argument("projective line: zero triple");
    detail::normalize_triple(h);
  }
  ProjLine(Rat x, Rat y, Rat z) : ProjLine(Triple<Rat>{std::move(x), std::move(y), std::move(z)}) {}
};

inline Rat incidence(const ProjPoint& p, const ProjLine& l) { return triple_dot(p.h, l.h); }
inline bool incident(const ProjPoint& p, const ProjLine& l) { return incidence(p, l) == 0; }

inline bool same_point(const ProjPoint& p, const ProjPoint& q) {
  return triple_is_zero(triple_cross(p.h, q.h));
}
inline bool same_line(const ProjLine& l, const ProjLine& m) {
  return triple_is_zero(triple_cross(l.h, m.h));
}

inline ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  Triple<Rat> c = triple_cross(p.h, q.h);
  if (triple_is_zero(c)) throw std::invalid_argument("join: coinciding points");
  return ProjLine(std::move(c));
}
inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  Triple<Rat> c = triple_cross(l.h, m.h);
  if (triple_is_zero(c)) throw std::invalid_argument("meet: coinciding lines");
  return ProjPoint(std::move(c));
}

struct Flag {
  ProjPoint point;
  ProjLine line;

  Flag() = default;
  Flag(ProjPoint p, ProjLine l) : point(std::move(p)), line(std::move(l)) {
    if (!incident(point, line)) throw std::invalid_argument("flag: point not on line");
  }
};

// Cross-ratio of four pairwise distinct triples spanning a common rank-2
// subspace (collinear points, or concurrent lines read as functionals).
// Uses dij = det(xi, xj, r) for an auxiliary r off the span; the choice of
// r and of representatives cancels.
template <class T>
T cross_ratio_span(const Triple<T>& x1, const Triple<T>& x2, const Triple<T>& x3,
                   const Triple<T>& x4) {
  if (!triple_is_zero(triple_cross(x1, x2))) {
    // x1, x2 span the subspace; everything else must lie in it.
  } else {
    throw std::invalid_argument("cross-ratio: first two elements coincide");
  }
  if (!is_zero_value(det3(x1, x2, x3)) || !is_zero_value(det3(x1, x2, x4)))
    throw std::invalid_argument("cross-ratio: elements not collinear/concurrent");

  T zero = x1[0] - x1[0];
  T one = zero;
  for (const T& comp : x1)
    if (!is_zero_value(comp)) {
      one = comp / comp;
      break;
    }
  // Some basis triple lies off the rank-2 span; use it as the auxiliary r.
  Triple<T> r{zero, zero, zero};
  for (int i = 0; i < 3; ++i) {
    Triple<T> e{zero, zero, zero};
    e[i] = one;
    if (!is_zero_value(det3(x1, x2, e))) {
      r = e;
      break;
    }
  }
  auto d = [&r](const Triple<T>& a, const Triple<T>& b) { return det3(a, b, r); };
  T d14 = d(x1, x4), d23 = d(x2, x3), d12 = d(x1, x2), d34 = d(x3, x4);
  if (is_zero_value(d14) || is_zero_value(d23) || is_zero_value(d12) || is_zero_value(d34))
    throw std::invalid_argument("cross-ratio: elements not pairwise distinct");
  return (d12 * d34) / (d14 * d23);
}

inline Rat cross_ratio(const ProjPoint& x1, const ProjPoint& x2, const ProjPoint& x3,
                       const ProjPoint& x4) {
  return cross_ratio_span(x1.h, x2.h, x3.h, x4.h);
}
inline Rat cross_ratio(const ProjLine& x1, const ProjLine& x2, const ProjLine& x3,
                       const ProjLine& x4) {
  return cross_ratio_span(x1.h, x2.h, x3.h, x4.h);
}

// Triple ratio from the functional definition. Degenerate incidences beyond
// the flag incidences (a vertex on another flag's line) are rejected.
template <class T>
T triple_ratio_span(const Triple<T>& A, const Triple<T>& a, const Triple<T>& B,
                    const Triple<T>& b, const Triple<T>& C, const Triple<T>& c) {
  T num = triple_dot(a, B) * triple_dot(b, C) * triple_dot(c, A);
  T den = triple_dot(a, C) * triple_dot(b, A) * triple_dot(c, B);
  if (is_zero_value(num) || is_zero_value(den))
    throw std::invalid_argument("triple ratio: flags not in general position");
  return num / den;
}

inline Rat triple_ratio(const Flag& f1, const Flag& f2, const Flag& f3) {
  return triple_ratio_span(f1.point.h, f1.line.h, f2.point.h, f2.line.h, f3.point.h, f3.line.h);
}

// The same invariant as the cross-ratio of the pencil quadruple
// a, AB, A(b cap c), AC at the first vertex; agreement with triple_ratio is
// a test target.
inline Rat triple_ratio_from_lines(const Flag& f1, const Flag& f2, const Flag& f3) {
  const ProjPoint& A = f1.point;
  ProjLine ab = join(A, f2.point);
  ProjLine ac = join(A, f3.point);
  ProjLine abc = join(A, meet(f2.line, f3.line));
  return cross_ratio(f1.line, ab, abc, ac);
}

// Chart-based convexity. A chart is a line missing every vertex; after
// rescaling each vertex to positive pairing with the chart, the cycle is
// convex exactly when for every directed edge all remaining vertices lie
// strictly on one side, with one global orientation. Positive rescaling also
// certifies that the region bounded misses the chart line.
inline bool convex_in_chart(const std::vector<ProjPoint>& cycle, const ProjLine& chart) {
  int n = static_cast<int>(cycle.size());
  if (n < 3) return false;
  std::vector<Triple<Rat>> v;
  v.reserve(n);
  for (const ProjPoint& p : cycle) {
    Rat s = incidence(p, chart);
    if (s == 0) return false;
    Triple<Rat> t = p.h;
    if (s < 0)
      for (Rat& x : t) x = -x;
    v.push_back(std::move(t));
  }
  if (n == 3) return det3(v[0], v[1], v[2]) != 0;
  int orient = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      Rat d = det3(v[i], v[(i + 1) % n], v[j]);
      int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
      if (s == 0) return false;
      if (orient == 0) orient = s;
      if (s != orient) return false;
    }
  }
  return true;
}

// Deterministic chart candidates: the coordinate lines, then seeded random
// small-integer lines.
inline std::vector<ProjLine> chart_candidates(int count = 400) {
  std::vector<ProjLine> out{ProjLine(Rat(0), Rat(0), Rat(1)), ProjLine(Rat(1), Rat(0), Rat(0)),
                            ProjLine(Rat(0), Rat(1), Rat(0))};
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> coeff(-9, 9);
  while (static_cast<int>(out.size()) < count) {
    Triple<Rat> t{Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
    if (triple_is_zero(t)) continue;
    out.emplace_back(std::move(t));
  }
  return out;
}

inline std::optional<ProjLine> convex_chart(const std::vector<ProjPoint>& cycle) {
  for (const ProjLine& chart : chart_candidates())
    if (convex_in_chart(cycle, chart)) return chart;
  return std::nullopt;
}

inline bool is_convex_polygon(const std::vector<ProjPoint>& cycle) {
  return convex_chart(cycle).has_value();
}

// PGL3 action used by invariance tests: points by m, lines by the inverse
// transpose (as row vectors: l * m^{-1}).
inline ProjPoint apply(const Mat3<Rat>& m, const ProjPoint& p) { return ProjPoint(m * p.h); }
inline ProjLine apply(const Mat3<Rat>& m, const ProjLine& l) {
  return ProjLine(apply_row(l.h, m.inverse()));
}
inline Flag apply(const Mat3<Rat>& m, const Flag& f) {
  return Flag(apply(m, f.point), apply(m, f.line));
}

}  // namespace xcv
