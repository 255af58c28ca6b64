#pragma once

// Pairs of convex polygons, one inscribed in the other, with vertex i of the
// inner polygon lying on side i of the outer one. Coordinates on the moduli
// space: one triple ratio per triangle of a triangulated n-gon and two
// cross-ratios per diagonal, with the cross-ratio of the line pencil at a
// diagonal endpoint stored at the marked point nearer that endpoint. The
// inverse construction places the first triangle in a canonical frame and
// solves linearly in line pencils for each glued triangle, so round trips
// are exact.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xcv/projective.hpp"
#include "xcv/triangulation.hpp"

namespace xcv {

using CoordinateAssignment = std::vector<Rat>;

struct PolygonPair {
  std::vector<ProjPoint> vertices;  // inner polygon A_1..A_n in cyclic order
  std::vector<ProjLine> sides;      // outer polygon sides a_1..a_n, A_i on a_i

  int n() const { return static_cast<int>(vertices.size()); }
  Flag flag(int i) const { return Flag(vertices.at(i), sides.at(i)); }

  // Corners of the circumscribed polygon; corner i is between sides i, i+1.
  std::vector<ProjPoint> outer_vertices() const {
    std::vector<ProjPoint> out;
    int m = n();
    out.reserve(m);
    for (int i = 0; i < m; ++i) out.push_back(meet(sides[i], sides[(i + 1) % m]));
    return out;
  }

  void validate() const;
  bool is_valid() const {
    try {
      validate();
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
};

inline void PolygonPair::validate() const {
  int m = n();
  if (m < 3) throw std::invalid_argument("polygon pair: need at least 3 vertices");
  if (static_cast<int>(sides.size()) != m)
    throw std::invalid_argument("polygon pair: vertex/side count mismatch");
  for (int i = 0; i < m; ++i) {
    if (!incident(vertices[i], sides[i]))
      throw std::invalid_argument("polygon pair: vertex off its side");
    for (int j = i + 1; j < m; ++j) {
      if (same_point(vertices[i], vertices[j]))
        throw std::invalid_argument("polygon pair: repeated vertex");
      if (same_line(sides[i], sides[j]))
        throw std::invalid_argument("polygon pair: repeated side");
    }
  }
  std::vector<ProjPoint> outer = outer_vertices();

  for (const ProjLine& chart : chart_candidates()) {
    if (!convex_in_chart(vertices, chart) || !convex_in_chart(outer, chart)) continue;

    // Positive representatives against the chart; their sum is interior to
    // the outer polygon and orients each side line.
    auto lift = [&chart](const ProjPoint& p) {
      Triple<Rat> t = p.h;
      if (incidence(p, chart) < 0)
        for (Rat& x : t) x = -x;
      return t;
    };
    Triple<Rat> centroid{Rat(0), Rat(0), Rat(0)};
    for (const ProjPoint& v : outer) {
      Triple<Rat> t = lift(v);
      for (int k = 0; k < 3; ++k) centroid[k] += t[k];
    }
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      Rat s = triple_dot(centroid, sides[j].h);
      if (s == 0) {
        ok = false;
        break;
      }
      for (int i = 0; i < m && ok; ++i) {
        Rat t = triple_dot(lift(vertices[i]), sides[j].h) * s;
        if (i == j ? t != 0 : t <= 0) ok = false;
      }
    }
    if (ok) return;
  }
  throw std::invalid_argument("polygon pair: no chart exhibits a convex inscribed pair");
}

namespace detail {

// Corner of triangle t other than the two given ones.
inline int third_corner(const Triangulation& tri, int t, int u, int v) {
  for (int k = 0; k < 3; ++k) {
    int c = tri.side_start(t, k);
    if (c != u && c != v) return c;
  }
  throw std::logic_error("triangle has no third corner");
}

// A coordinate triple off the rank-2 span of m1, m2, for auxiliary use in
// pencil determinants.
inline Triple<Rat> off_span(const Triple<Rat>& m1, const Triple<Rat>& m2) {
  for (int i = 0; i < 3; ++i) {
    Triple<Rat> e{Rat(0), Rat(0), Rat(0)};
    e[i] = 1;
    if (det3(m1, m2, e) != 0) return e;
  }
  throw std::invalid_argument("pencil basis is degenerate");
}

// Solve for lines[u] in the pencil spanned by m1, m2 so that the cross-ratio
// of the quadruple is v. Positive v keeps the quadruple pairwise distinct,
// so the linear equation is nondegenerate.
inline Triple<Rat> solve_cross_ratio_pencil(int u, std::array<Triple<Rat>, 4> lines, const Rat& v,
                                            const Triple<Rat>& m1, const Triple<Rat>& m2) {
  Triple<Rat> r = off_span(m1, m2);
  auto residue = [&](const Rat& alpha, const Rat& beta) -> Rat {
    for (int k = 0; k < 3; ++k) lines[u][k] = alpha * m1[k] + beta * m2[k];
    auto d = [&](int i, int j) { return det3(lines[i], lines[j], r); };
    return v * d(0, 3) * d(1, 2) - d(0, 1) * d(2, 3);
  };
  Rat c1 = residue(Rat(1), Rat(0));
  Rat c2 = residue(Rat(0), Rat(1));
  if (c1 == 0 && c2 == 0)
    throw std::invalid_argument("cross-ratio solve: degenerate configuration");
  Triple<Rat> out;
  for (int k = 0; k < 3; ++k) out[k] = c2 * m1[k] - c1 * m2[k];
  if (triple_is_zero(out)) throw std::invalid_argument("cross-ratio solve: zero solution");
  return out;
}

// Solve for the line of flag u (points fixed) so that the triple ratio of
// the three flags is x; the unknown line runs in the pencil of m1, m2.
inline Triple<Rat> solve_triple_ratio_pencil(int u, const std::array<Triple<Rat>, 3>& pts,
                                             std::array<Triple<Rat>, 3> lines, const Rat& x,
                                             const Triple<Rat>& m1, const Triple<Rat>& m2) {
  auto residue = [&](const Rat& alpha, const Rat& beta) -> Rat {
    for (int k = 0; k < 3; ++k) lines[u][k] = alpha * m1[k] + beta * m2[k];
    Rat num = triple_dot(lines[0], pts[1]) * triple_dot(lines[1], pts[2]) *
              triple_dot(lines[2], pts[0]);
    Rat den = triple_dot(lines[0], pts[2]) * triple_dot(lines[1], pts[0]) *
              triple_dot(lines[2], pts[1]);
    return num - x * den;
  };
  Rat c1 = residue(Rat(1), Rat(0));
  Rat c2 = residue(Rat(0), Rat(1));
  if (c1 == 0 && c2 == 0)
    throw std::invalid_argument("triple-ratio solve: degenerate configuration");
  Triple<Rat> out;
  for (int k = 0; k < 3; ++k) out[k] = c2 * m1[k] - c1 * m2[k];
  if (triple_is_zero(out)) throw std::invalid_argument("triple-ratio solve: zero solution");
  return out;
}

inline void require_interior_polygon(const Triangulation& tri) {
  if (tri.kind != TriKind::PolygonInterior)
    throw std::invalid_argument("coordinates live on an interior polygon triangulation");
}

}  // namespace detail

// Read off the coordinates of a pair on a triangulated n-gon: triple ratios
// at triangle centers, and at each diagonal point the cross-ratio of the
// pencil at the nearer diagonal endpoint. For diagonal (P,Q) separating
// triangles (P,R,Q) and (P,Q,S): at P the quadruple is p, PR, PQ, PS and at
// Q it is q, QS, QP, QR.
inline CoordinateAssignment coords_of_polygon_pair(const PolygonPair& pp,
                                                   const Triangulation& tri) {
  detail::require_interior_polygon(tri);
  if (tri.polygon_n != pp.n())
    throw std::invalid_argument("triangulation size does not match the pair");

  CoordinateAssignment out(tri.n_points(), Rat(0));
  int nt = static_cast<int>(tri.tris.size());
  for (int t = 0; t < nt; ++t) {
    out[tri.center_of(t)] =
        triple_ratio(pp.flag(tri.side_start(t, 0)), pp.flag(tri.side_start(t, 1)),
                     pp.flag(tri.side_start(t, 2)));
  }
  for (int e = 0; e < tri.n_edges; ++e) {
    if (!tri.edge_has_points(e)) continue;
    auto s = tri.sides_of_edge(e);
    int P = tri.edge_ends[e][0], Q = tri.edge_ends[e][1];
    int R = detail::third_corner(tri, s.t_neg, P, Q);
    int S = detail::third_corner(tri, s.t_pos, P, Q);
    const ProjPoint &AP = pp.vertices[P], &AQ = pp.vertices[Q];
    const ProjPoint &AR = pp.vertices[R], &AS = pp.vertices[S];
    out[tri.point_at(e, 0)] =
        cross_ratio(pp.sides[P], join(AP, AR), join(AP, AQ), join(AP, AS));
    out[tri.point_at(e, 1)] =
        cross_ratio(pp.sides[Q], join(AQ, AS), join(AQ, AP), join(AQ, AR));
  }
  return out;
}

// Rebuild a pair from positive coordinates. The first triangle is placed in
// the canonical frame; each neighboring triangle is solved from the two
// diagonal cross-ratios (lines in the pencils at the diagonal ends) and its
// triple ratio (side line in the pencil at the new vertex). The result is
// validated, so callers get either a genuine convex inscribed pair or an
// exception.
inline PolygonPair polygon_pair_from_coords(const CoordinateAssignment& values,
                                            const Triangulation& tri) {
  detail::require_interior_polygon(tri);
  if (static_cast<int>(values.size()) != tri.n_points())
    throw std::invalid_argument("coordinate count does not match the triangulation");
  for (const Rat& v : values)
    if (v <= 0) throw std::invalid_argument("polygon reconstruction needs positive coordinates");

  int n = tri.polygon_n;
  int nt = static_cast<int>(tri.tris.size());
  std::vector<std::optional<Flag>> flags(n);
  std::vector<bool> placed(nt, false);

  {
    const Rat& x = values[tri.center_of(0)];
    int c0 = tri.side_start(0, 0), c1 = tri.side_start(0, 1), c2 = tri.side_start(0, 2);
    flags[c0] = Flag(ProjPoint(Rat(1), Rat(-1), Rat(1)), ProjLine(Rat(1), Rat(1) + x, x));
    flags[c1] = Flag(ProjPoint(Rat(0), Rat(0), Rat(1)), ProjLine(Rat(1), Rat(0), Rat(0)));
    flags[c2] = Flag(ProjPoint(Rat(1), Rat(0), Rat(0)), ProjLine(Rat(0), Rat(0), Rat(1)));
    placed[0] = true;
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (int e = 0; e < tri.n_edges; ++e) {
      if (!tri.edge_has_points(e)) continue;
      auto s = tri.sides_of_edge(e);
      if (placed[s.t_neg] == placed[s.t_pos]) continue;
      progress = true;

      int P = tri.edge_ends[e][0], Q = tri.edge_ends[e][1];
      int R = detail::third_corner(tri, s.t_neg, P, Q);
      int S = detail::third_corner(tri, s.t_pos, P, Q);
      const Rat& z = values[tri.point_at(e, 0)];
      const Rat& w = values[tri.point_at(e, 1)];
      const Flag &FP = *flags[P], &FQ = *flags[Q];
      Triple<Rat> pq = join(FP.point, FQ.point).h;
      Triple<Rat> qp = join(FQ.point, FP.point).h;

      int unknown;           // corner being solved
      int tri_new;           // triangle providing its triple ratio
      Triple<Rat> at_p, at_q;  // lines of the new vertex through P and Q
      if (placed[s.t_neg]) {
        unknown = S;
        tri_new = s.t_pos;
        Triple<Rat> pr = join(FP.point, flags[R]->point).h;
        Triple<Rat> qr = join(FQ.point, flags[R]->point).h;
        at_p = detail::solve_cross_ratio_pencil(3, {FP.line.h, pr, pq, {}}, z, FP.line.h, pq);
        at_q = detail::solve_cross_ratio_pencil(1, {FQ.line.h, {}, qp, qr}, w, FQ.line.h, qp);
      } else {
        unknown = R;
        tri_new = s.t_neg;
        Triple<Rat> ps = join(FP.point, flags[S]->point).h;
        Triple<Rat> qs = join(FQ.point, flags[S]->point).h;
        at_p = detail::solve_cross_ratio_pencil(1, {FP.line.h, {}, pq, ps}, z, FP.line.h, pq);
        at_q = detail::solve_cross_ratio_pencil(3, {FQ.line.h, qs, qp, {}}, w, FQ.line.h, qp);
      }

      ProjPoint vertex = meet(ProjLine(at_p), ProjLine(at_q));
      for (int c : {P, Q, R, S})
        if (flags[c] && same_point(vertex, flags[c]->point))
          throw std::invalid_argument("polygon reconstruction: degenerate vertex");

      // The new triangle's corners in stored (counterclockwise) order, with
      // the unknown side line solved from the triple ratio at its center.
      std::array<int, 3> corners{tri.side_start(tri_new, 0), tri.side_start(tri_new, 1),
                                 tri.side_start(tri_new, 2)};
      std::array<Triple<Rat>, 3> pts, lines;
      int slot = -1;
      for (int k = 0; k < 3; ++k) {
        if (corners[k] == unknown) {
          slot = k;
          pts[k] = vertex.h;
        } else {
          pts[k] = flags[corners[k]]->point.h;
          lines[k] = flags[corners[k]]->line.h;
        }
      }
      Triple<Rat> m1 = triple_cross(vertex.h, FP.point.h);
      Triple<Rat> m2 = triple_cross(vertex.h, FQ.point.h);
      Triple<Rat> side = detail::solve_triple_ratio_pencil(slot, pts, lines,
                                                           values[tri.center_of(tri_new)], m1, m2);
      flags[unknown] = Flag(vertex, ProjLine(side));
      placed[tri_new] = true;
    }
  }

  PolygonPair pp;
  pp.vertices.reserve(n);
  pp.sides.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!flags[i]) throw std::logic_error("polygon reconstruction left a corner unplaced");
    pp.vertices.push_back(flags[i]->point);
    pp.sides.push_back(flags[i]->line);
  }
  pp.validate();
  return pp;
}

// Projective duality: side coefficient triples become the vertices of the
// dual pair and vertex triples its sides, index by index. Applying it twice
// restores the original coordinates exactly.
inline PolygonPair dual_polygon_pair(const PolygonPair& pp) {
  PolygonPair dual;
  dual.vertices.reserve(pp.n());
  dual.sides.reserve(pp.n());
  for (const ProjLine& a : pp.sides) dual.vertices.emplace_back(ProjPoint(a.h));
  for (const ProjPoint& A : pp.vertices) dual.sides.emplace_back(ProjLine(A.h));
  return dual;
}

// Points on the conic x0*x2 = x1^2 and its tangent lines; a polygon with
// vertices on the conic and tangent sides is a valid pair for increasing
// parameters, and is projectively self-dual.
inline ProjPoint conic_point(const Rat& t) { return ProjPoint(Rat(1), t, t * t); }
inline ProjLine conic_tangent(const Rat& t) { return ProjLine(t * t, Rat(-2) * t, Rat(1)); }

inline PolygonPair conic_polygon_pair(const std::vector<Rat>& ts) {
  if (ts.size() < 3) throw std::invalid_argument("conic pair: need at least 3 parameters");
  for (size_t i = 0; i + 1 < ts.size(); ++i)
    if (!(ts[i] < ts[i + 1]))
      throw std::invalid_argument("conic pair: parameters must be strictly increasing");
  PolygonPair pp;
  for (const Rat& t : ts) {
    pp.vertices.push_back(conic_point(t));
    pp.sides.push_back(conic_tangent(t));
  }
  return pp;
}

namespace detail {

// Decimal rendering of a rational with the given significant digits;
// presentation only, never used in predicates.
inline std::string rat_decimal(const Rat& x, int digits = 12) {
  if (x == 0) return "0";
  mpz_class num = x.get_num(), den = x.get_den();
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  mpz_class ip = num / den, rem = num % den;
  std::string head = ip.get_str();
  int frac_digits = digits - static_cast<int>(ip == 0 ? 0 : head.size());
  if (frac_digits <= 0 || rem == 0) return sign + head;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
  mpz_class frac = (rem * scale) / den;
  std::string tail = frac.get_str();
  tail.insert(tail.begin(), frac_digits - tail.size(), '0');
  while (!tail.empty() && tail.back() == '0') tail.pop_back();
  if (tail.empty()) return sign + head;
  return sign + head + "." + tail;
}

}  // namespace detail

// A deterministic SVG drawing of the pair in an affine chart where both
// polygons are convex. Coordinates are printed to 12 significant digits.
inline std::string polygon_pair_svg(const PolygonPair& pp, int size = 600) {
  pp.validate();
  std::vector<ProjPoint> outer = pp.outer_vertices();
  std::vector<ProjPoint> all = pp.vertices;
  all.insert(all.end(), outer.begin(), outer.end());

  ProjLine chart;
  bool found = false;
  for (const ProjLine& cand : chart_candidates()) {
    if (convex_in_chart(pp.vertices, cand) && convex_in_chart(outer, cand)) {
      chart = cand;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("svg: no affine chart for the pair");

  // Two functionals completing the chart to a basis give affine coordinates.
  Triple<Rat> u{Rat(0), Rat(0), Rat(0)}, v = u;
  int got = 0;
  for (int i = 0; i < 3 && got < 2; ++i) {
    Triple<Rat> e{Rat(0), Rat(0), Rat(0)};
    e[i] = 1;
    if (got == 0) {
      if (!triple_is_zero(triple_cross(e, chart.h))) {
        u = e;
        ++got;
      }
    } else if (det3(u, e, chart.h) != 0) {
      v = e;
      ++got;
    }
  }

  std::vector<std::pair<Rat, Rat>> inner_xy, outer_xy;
  auto to_affine = [&](const ProjPoint& p) -> std::pair<Rat, Rat> {
    Rat s = incidence(p, chart);
    return {triple_dot(p.h, u) / s, triple_dot(p.h, v) / s};
  };
  for (const ProjPoint& p : pp.vertices) inner_xy.push_back(to_affine(p));
  for (const ProjPoint& p : outer) outer_xy.push_back(to_affine(p));

  Rat xmin = outer_xy[0].first, xmax = xmin, ymin = outer_xy[0].second, ymax = ymin;
  for (const auto& list : {inner_xy, outer_xy})
    for (const auto& [x, y] : list) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  Rat w = xmax - xmin, h = ymax - ymin;
  Rat span = std::max(w, h);
  if (span == 0) span = 1;
  Rat margin = Rat(size) / 10;
  Rat scale = (Rat(size) - 2 * margin) / span;
  auto map_pt = [&](const std::pair<Rat, Rat>& q) {
    Rat x = margin + (q.first - xmin) * scale;
    Rat y = Rat(size) - (margin + (q.second - ymin) * scale);  // y grows upward
    return detail::rat_decimal(x) + "," + detail::rat_decimal(y);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << size << " " << size
      << "\">\n";
  svg << "  <polygon points=\"";
  for (size_t i = 0; i < outer_xy.size(); ++i) svg << (i ? " " : "") << map_pt(outer_xy[i]);
  svg << "\" fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"2\"/>\n";
  svg << "  <polygon points=\"";
  for (size_t i = 0; i < inner_xy.size(); ++i) svg << (i ? " " : "") << map_pt(inner_xy[i]);
  svg << "\" fill=\"#2e8b57\" fill-opacity=\"0.15\" stroke=\"#2e8b57\" stroke-width=\"2\"/>\n";
  for (const auto& q : inner_xy) {
    auto comma = map_pt(q).find(',');
    std::string s = map_pt(q);
    svg << "  <circle cx=\"" << s.substr(0, comma) << "\" cy=\"" << s.substr(comma + 1)
        << "\" r=\"4\" fill=\"#2e8b57\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace xcv
