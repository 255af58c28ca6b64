#pragma once

// Monodromy of convex projective structures over the exact coordinate field.
// The graph carrying the local system has one little counterclockwise
// 3-cycle per triangle (t-edges, labeled T(X) with X the triangle's center
// coordinate) and one transversal edge per internal edge of the
// triangulation (e-edges, labeled E(Z,W) from the edge's two coordinates).
// Loop products are taken left to right in traversal order. Conventions,
// fixed once and verified by the test suite:
//   - a transversal crossing is oriented out of the triangle on the right
//     of the directed edge and into the one on its left; looking along the
//     crossing, W is the edge coordinate to the left (near end 0) and Z the
//     one to the right (near end 1). Crossing backwards swaps the roles,
//     consistently with E(Z,W)^{-1} = E(W,Z) holding exactly;
//   - one counterclockwise step around a little triangle (side k to side
//     k+1) contributes T(X); T(X)^3 = X * Id, so a clockwise step
//     contributes the exact inverse X^{-1} T(X)^2;
//   - traces and positivity certificates use this exact lift verbatim, with
//     no determinant rescaling.
// A normalized loop alternates transversal crossings with single little-
// triangle steps, so its monodromy is a product of blocks E*T (upper
// triangular) and E*T^{-1} (lower triangular).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linear3.hpp"
#include "positivity.hpp"
#include "ratfunc.hpp"
#include "seed.hpp"
#include "triangulation.hpp"

namespace xcv {

inline Mat3<RatFunc> t_matrix(int arity, int x_var) {
  auto k = [&](long v) { return RatFunc::constant(arity, Rat(v)); };
  RatFunc X = RatFunc::variable(arity, x_var);
  return Mat3<RatFunc>::from_rows({k(0), k(0), k(1)}, {k(0), k(-1), k(-1)},
                                  {X, k(1) + X, k(1)});
}

inline Mat3<RatFunc> e_matrix(int arity, int z_var, int w_var) {
  auto k = [&](long v) { return RatFunc::constant(arity, Rat(v)); };
  return Mat3<RatFunc>::from_rows({k(0), k(0), RatFunc::variable(arity, z_var, -1)},
                                  {k(0), k(-1), k(0)},
                                  {RatFunc::variable(arity, w_var), k(0), k(0)});
}

// One step of a normalized loop: cross the transversal at `edge` (e_dir +1
// goes with the crossing orientation above, -1 against it), then take one
// little-triangle step in the arrival triangle (t_dir +1 counterclockwise,
// -1 clockwise).
struct LoopStep {
  int edge = -1;
  int e_dir = +1;
  int t_dir = +1;
};

struct LoopWord {
  std::vector<LoopStep> steps;

  int length() const { return static_cast<int>(steps.size()); }

  // A loop encircles a puncture or polygon boundary exactly when every
  // little-triangle step turns the same way.
  bool boundary_like() const {
    if (steps.empty()) return false;
    for (const LoopStep& s : steps)
      if (s.t_dir != steps.front().t_dir) return false;
    return true;
  }

  LoopWord rotated(int by) const {
    LoopWord r;
    int n = length();
    r.steps.reserve(n);
    for (int i = 0; i < n; ++i) r.steps.push_back(steps[(i + by) % n]);
    return r;
  }
};

struct MonodromyGraph {
  Triangulation tri;
  Seed seed;
  int arity = 0;

  int little_triangles() const { return static_cast<int>(tri.tris.size()); }

  // Internal edges joining two distinct triangles; these carry E matrices.
  std::vector<int> e_edges() const {
    std::vector<int> out;
    for (int e = 0; e < tri.n_edges; ++e) {
      auto s = tri.sides_of_edge(e);
      if (s.count == 2 && tri.edge_has_points(e) && s.t_pos != s.t_neg) out.push_back(e);
    }
    return out;
  }

  // First Betti number of the dual graph (one node per triangle, one edge
  // per transversal), which the loop words live on.
  int loop_rank() const {
    return static_cast<int>(e_edges().size()) - little_triangles() + 1;
  }

  Mat3<RatFunc> t_step(int t, int dir) const {
    Mat3<RatFunc> m = t_matrix(arity, tri.center_of(t));
    return dir > 0 ? m : m.inverse();
  }

  Mat3<RatFunc> e_step(int e, int dir) const {
    int w = tri.point_at(e, 0), z = tri.point_at(e, 1);
    if (dir < 0) std::swap(w, z);
    return e_matrix(arity, z, w);
  }
};

inline MonodromyGraph build_graph(const Triangulation& tri) {
  if (tri.kind == TriKind::PolygonWindow)
    throw std::invalid_argument("monodromy graph: window triangulations carry boundary slots");
  MonodromyGraph g;
  g.tri = tri;
  g.seed = epsilon_of_triangulation(tri);
  g.arity = g.seed.size();
  return g;
}

// Builds the normalized loop crossing the given internal edges in order.
// The walk direction is determined by trying both orientations of the first
// crossing; each consecutive pair of crossings must be distinct sides of a
// common triangle (a repeated side would mean an immediate backtrack, which
// a normalized loop never contains).
inline LoopWord loop_from_edges(const MonodromyGraph& g, const std::vector<int>& word) {
  const Triangulation& tri = g.tri;
  int n = static_cast<int>(word.size());
  if (n == 0) throw std::invalid_argument("loop word is empty");
  for (int e : word) {
    if (e < 0 || e >= tri.n_edges) throw std::invalid_argument("loop word: no such edge");
    auto s = tri.sides_of_edge(e);
    if (s.count != 2 || !tri.edge_has_points(e))
      throw std::invalid_argument("loop word crosses an edge without coordinates");
    if (s.t_pos == s.t_neg)
      throw std::invalid_argument("loop word crosses a self-glued edge");
  }

  for (int first_dir : {+1, -1}) {
    std::vector<LoopStep> steps(n);
    std::vector<int> arrive_side(n), depart_side(n);
    auto s0 = tri.sides_of_edge(word[0]);
    int start = first_dir > 0 ? s0.t_neg : s0.t_pos;
    int cur = start;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      auto s = tri.sides_of_edge(word[i]);
      int dir;
      if (cur == s.t_neg) {
        dir = +1;
      } else if (cur == s.t_pos) {
        dir = -1;
      } else {
        ok = false;
        break;
      }
      steps[i].edge = word[i];
      steps[i].e_dir = dir;
      depart_side[i] = dir > 0 ? s.k_neg : s.k_pos;
      arrive_side[i] = dir > 0 ? s.k_pos : s.k_neg;
      cur = dir > 0 ? s.t_pos : s.t_neg;
    }
    if (!ok || cur != start) continue;
    for (int i = 0; i < n && ok; ++i) {
      int a = arrive_side[i], d = depart_side[(i + 1) % n];
      if (d == (a + 1) % 3) {
        steps[i].t_dir = +1;
      } else if (d == (a + 2) % 3) {
        steps[i].t_dir = -1;
      } else {
        ok = false;  // depart == arrive: the word backtracks
      }
    }
    if (!ok) continue;
    LoopWord lw;
    lw.steps = std::move(steps);
    return lw;
  }
  throw std::invalid_argument("loop word does not close into a normalized loop");
}

inline Mat3<RatFunc> monodromy(const MonodromyGraph& g, const LoopWord& loop) {
  if (loop.steps.empty()) throw std::invalid_argument("monodromy of an empty loop");
  Mat3<RatFunc> m = Mat3<RatFunc>::identity(RatFunc::constant(g.arity, 1),
                                            RatFunc::constant(g.arity, 0));
  for (const LoopStep& s : loop.steps) {
    auto sides = g.tri.sides_of_edge(s.edge);
    int arrived = s.e_dir > 0 ? sides.t_pos : sides.t_neg;
    m = m * g.e_step(s.edge, s.e_dir);
    m = m * g.t_step(arrived, s.t_dir);
  }
  return m;
}

inline Mat3<RatFunc> monodromy_of_edges(const MonodromyGraph& g, const std::vector<int>& word) {
  return monodromy(g, loop_from_edges(g, word));
}

// --- Total positivity -------------------------------------------------

enum class TriangularHint { None, Upper, Lower };

struct TotalPositivity {
  bool ok = false;
  int skipped = 0;  // identically-zero minors excused by a triangular hint
  std::vector<std::pair<std::string, PosCertificate>> minors;
};

// Certifies positivity of every minor of m on the positive orthant. With a
// triangular hint, identically-zero minors are excused (a triangular matrix
// is totally positive when all its not-identically-zero minors are); with
// no hint any zero minor fails.
inline TotalPositivity certify_total_positivity(const Mat3<RatFunc>& m,
                                                TriangularHint hint = TriangularHint::None) {
  TotalPositivity out;
  out.ok = true;
  auto consider = [&](const std::string& name, const RatFunc& minor) {
    if (hint != TriangularHint::None && minor.is_zero()) {
      ++out.skipped;
      return;
    }
    PosCertificate cert = certify_positive(minor);
    bool good = cert.status == PosStatus::POSITIVE_LAURENT ||
                cert.status == PosStatus::POSITIVE_RATIO;
    if (!good) out.ok = false;
    out.minors.emplace_back(name, std::move(cert));
  };

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      consider("entry(" + std::to_string(i) + "," + std::to_string(j) + ")", m.row[i][j]);
  for (int i0 = 0; i0 < 3; ++i0)
    for (int i1 = i0 + 1; i1 < 3; ++i1)
      for (int j0 = 0; j0 < 3; ++j0)
        for (int j1 = j0 + 1; j1 < 3; ++j1) {
          RatFunc minor = m.row[i0][j0] * m.row[i1][j1] - m.row[i0][j1] * m.row[i1][j0];
          consider("minor(" + std::to_string(i0) + std::to_string(i1) + "|" +
                       std::to_string(j0) + std::to_string(j1) + ")",
                   minor);
        }
  consider("det", m.det());
  return out;
}

struct LoopPositivity {
  bool certified = false;
  int rotation = -1;  // cyclic rotation of the loop that certified
  TotalPositivity minors;
};

// A loop's monodromy is only claimed to be conjugate to a totally positive
// matrix; cyclic rotations of the word realize a family of conjugates, and
// we certify the first rotation whose product passes outright.
inline LoopPositivity certify_loop_total_positivity(const MonodromyGraph& g,
                                                    const LoopWord& loop,
                                                    TriangularHint hint = TriangularHint::None) {
  LoopPositivity out;
  for (int r = 0; r < loop.length(); ++r) {
    TotalPositivity tp = certify_total_positivity(monodromy(g, loop.rotated(r)), hint);
    if (tp.ok) {
      out.certified = true;
      out.rotation = r;
      out.minors = std::move(tp);
      return out;
    }
    if (r == 0) out.minors = std::move(tp);
  }
  return out;
}

// --- Eigenvalue separation --------------------------------------------

namespace detail {

using UPoly = std::vector<Rat>;  // coefficient of x^i at index i

inline void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_derivative(const UPoly& p) {
  UPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  upoly_trim(d);
  return d;
}

inline UPoly upoly_remainder(UPoly a, const UPoly& b) {
  upoly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat q = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    upoly_trim(a);
  }
  return a;
}

inline int rat_sign(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign of p at +infinity (dir=+1) or -infinity (dir=-1).
inline int sign_at_infinity(const UPoly& p, int dir) {
  if (p.empty()) return 0;
  int s = rat_sign(p.back());
  if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

inline int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace detail

// Number of distinct real roots of a rational-coefficient polynomial,
// counted exactly by the sign variations of its Sturm chain at the two
// infinities. Works for non-squarefree input too: the chain then ends at
// the nonconstant gcd, which rescales both variation counts equally.
inline int distinct_real_roots(std::vector<Rat> coeffs) {
  detail::upoly_trim(coeffs);
  if (coeffs.size() <= 1) return 0;
  std::vector<detail::UPoly> chain{coeffs, detail::upoly_derivative(coeffs)};
  while (!chain.back().empty() && chain.back().size() > 1) {
    detail::UPoly r = detail::upoly_remainder(chain[chain.size() - 2], chain.back());
    for (Rat& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_neg, at_pos;
  for (const auto& p : chain) {
    at_neg.push_back(detail::sign_at_infinity(p, -1));
    at_pos.push_back(detail::sign_at_infinity(p, +1));
  }
  return detail::sign_variations(at_neg) - detail::sign_variations(at_pos);
}

inline std::vector<Rat> characteristic_polynomial(const Mat3<Rat>& m) {
  Rat c2(0);
  for (int i = 0; i < 3; ++i) {
    int a = (i + 1) % 3, b = (i + 2) % 3;
    c2 += m.row[a][a] * m.row[b][b] - m.row[a][b] * m.row[b][a];
  }
  return {-m.det(), c2, -m.trace(), Rat(1)};
}

// True exactly when the matrix has three distinct real eigenvalues.
inline bool check_regular_hyperbolic(const Mat3<Rat>& m) {
  return distinct_real_roots(characteristic_polynomial(m)) == 3;
}

inline Mat3<Rat> specialize(const Mat3<RatFunc>& m, const std::vector<Rat>& point) {
  Mat3<Rat> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.row[i][j] = m.row[i][j].eval(point);
  return out;
}

inline bool check_regular_hyperbolic(const Mat3<RatFunc>& m, const std::vector<Rat>& point) {
  return check_regular_hyperbolic(specialize(m, point));
}

// --- Traces -------------------------------------------------------------

struct TraceResult {
  RatFunc trace;
  PosCertificate certificate;
};

inline TraceResult trace_of_power(const MonodromyGraph& g, const LoopWord& loop, int n) {
  if (n < 1) throw std::invalid_argument("trace_of_power: power must be >= 1");
  Mat3<RatFunc> m = monodromy(g, loop);
  Mat3<RatFunc> p = m;
  for (int i = 1; i < n; ++i) p = p * m;
  TraceResult out;
  out.trace = p.trace();
  out.certificate = certify_positive(out.trace);
  return out;
}

}  // namespace xcv
