#pragma once

// Diagonal flips of a triangulation and the coordinate transformations
// they induce. A flip can be computed two ways: by the closed-form update
// of the twelve affected coordinate roles, or as the composition of four
// mutations (at the two diagonal points, then the two triangle centers)
// followed by the relabeling that matches old point slots to their roles
// in the new triangulation. Both return the same ClusterMap; keeping the
// two routes independent makes that equality a meaningful test.
//
// Roles around the flipped diagonal, quadrilateral V_A V_B V_C V_D
// counterclockwise with the diagonal running V_A -> V_C:
//   sides (near, far): (A,B) on V_A->V_B, (C,D) on V_B->V_C,
//                      (E,F) on V_C->V_D, (G,H) on V_D->V_A,
//   Z near V_A and W near V_C on the diagonal,
//   X the center of triangle V_A V_B V_C, Y of V_C V_D V_A.
// After the flip the diagonal runs V_B -> V_D; the old center slots hold
// the new diagonal-point values and vice versa.

#include <algorithm>
#include <array>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "seed.hpp"
#include "triangulation.hpp"

namespace xcv {

struct QuadSlots {
  int t_pos = -1, k_pos = -1, t_neg = -1, k_neg = -1;
  int VA = -1, VB = -1, VC = -1, VD = -1;
  // Marked point indices; side points may be -1 when the side carries none.
  int A = -1, B = -1, C = -1, D = -1, E = -1, F = -1, G = -1, H = -1;
  int X = -1, Y = -1, Z = -1, W = -1;
};

inline QuadSlots quad_slots(const Triangulation& tri, int e) {
  if (e < 0 || e >= tri.n_edges) throw std::invalid_argument("flip: no such edge");
  if (tri.edge_boundary.size() > static_cast<size_t>(e) && tri.edge_boundary[e])
    throw std::invalid_argument("flip: boundary edge cannot be flipped");
  auto s = tri.sides_of_edge(e);
  if (s.count != 2) throw std::invalid_argument("flip: edge is not internal");
  if (s.t_pos == s.t_neg) throw std::invalid_argument("flip not supported at self-glued edge");

  QuadSlots q;
  q.t_pos = s.t_pos;
  q.k_pos = s.k_pos;
  q.t_neg = s.t_neg;
  q.k_neg = s.k_neg;
  q.VA = tri.edge_ends[e][0];
  q.VC = tri.edge_ends[e][1];
  q.VB = tri.side_end(q.t_neg, (q.k_neg + 1) % 3);
  q.VD = tri.side_end(q.t_pos, (q.k_pos + 1) % 3);
  q.A = tri.side_start_point(q.t_neg, (q.k_neg + 1) % 3);
  q.B = tri.side_end_point(q.t_neg, (q.k_neg + 1) % 3);
  q.C = tri.side_start_point(q.t_neg, (q.k_neg + 2) % 3);
  q.D = tri.side_end_point(q.t_neg, (q.k_neg + 2) % 3);
  q.E = tri.side_start_point(q.t_pos, (q.k_pos + 1) % 3);
  q.F = tri.side_end_point(q.t_pos, (q.k_pos + 1) % 3);
  q.G = tri.side_start_point(q.t_pos, (q.k_pos + 2) % 3);
  q.H = tri.side_end_point(q.t_pos, (q.k_pos + 2) % 3);
  q.Z = tri.point_at(e, 0);
  q.W = tri.point_at(e, 1);
  q.X = tri.center_of(q.t_neg);
  q.Y = tri.center_of(q.t_pos);
  return q;
}

namespace detail {

inline Triangulation flipped_triangulation(const Triangulation& tri, int e, const QuadSlots& q) {
  Triangulation out = tri;
  out.edge_ends[e] = {q.VB, q.VD};
  Triangle t1;  // V_B V_C V_D, counterclockwise
  t1.side[0] = tri.tris[q.t_neg].side[(q.k_neg + 2) % 3];
  t1.side[1] = tri.tris[q.t_pos].side[(q.k_pos + 1) % 3];
  t1.side[2] = TriSide{e, -1};
  Triangle t2;  // V_D V_A V_B
  t2.side[0] = tri.tris[q.t_pos].side[(q.k_pos + 2) % 3];
  t2.side[1] = tri.tris[q.t_neg].side[(q.k_neg + 1) % 3];
  t2.side[2] = TriSide{e, +1};
  out.tris[q.t_neg] = t1;
  out.tris[q.t_pos] = t2;

  if (out.kind == TriKind::Surface) {
    // Vertex classes are unchanged by a flip, but recompute the end ids of
    // the flipped edge from any triangle corner that pins them down: the
    // new diagonal starts at V_B and ends at V_D, both known above.
    out.edge_ends[e] = {q.VB, q.VD};
  }
  detail::refresh_point_names(out);
  validate_triangulation(out);
  return out;
}

}  // namespace detail

struct FlipResult {
  Triangulation tri;  // after the flip
  ClusterMap map;     // new coordinates expressed in the old ones
};

inline FlipResult flip_closed_form(const Triangulation& tri, int e) {
  QuadSlots q = quad_slots(tri, e);
  Seed source = epsilon_of_triangulation(tri);
  Triangulation new_tri = detail::flipped_triangulation(tri, e, q);
  Seed target = epsilon_of_triangulation(new_tri);

  int n = source.size();
  RatFunc one = RatFunc::constant(n, 1);
  RatFunc x = RatFunc::variable(n, q.X), y = RatFunc::variable(n, q.Y),
          z = RatFunc::variable(n, q.Z), w = RatFunc::variable(n, q.W);
  RatFunc p = one + z + z * x + z * x * w;
  RatFunc r = one + w + w * y + w * y * z;

  std::vector<RatFunc> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) images.push_back(RatFunc::variable(n, i));

  auto scale = [&](int pt, const RatFunc& factor) {
    if (pt >= 0) images[pt] *= factor;
  };
  scale(q.A, one + z);
  scale(q.B, p / (one + z));
  scale(q.C, (one + w) * x * z / p);
  scale(q.D, w / (one + w));
  scale(q.E, one + w);
  scale(q.F, r / (one + w));
  scale(q.G, (one + z) * y * w / r);
  scale(q.H, z / (one + z));

  images[q.Z] = (one + z) / (x * z * (one + w));  // new diagonal point near V_B
  images[q.W] = (one + w) / (y * w * (one + z));  // new diagonal point near V_D
  images[q.X] = y * p / r;                        // center of the new V_B V_C V_D
  images[q.Y] = x * r / p;                        // center of the new V_D V_A V_B

  return FlipResult{std::move(new_tri), ClusterMap{std::move(source), std::move(target),
                                                   std::move(images)}};
}

inline FlipResult flip_via_mutations(const Triangulation& tri, int e) {
  QuadSlots q = quad_slots(tri, e);
  Seed source = epsilon_of_triangulation(tri);
  Triangulation new_tri = detail::flipped_triangulation(tri, e, q);
  Seed target = epsilon_of_triangulation(new_tri);

  ClusterMap composed = mutate_sequence(source, {q.Z, q.W, q.X, q.Y});

  // Slot relabeling: the value left at an old slot belongs to a new role.
  auto tau = [&](int i) {
    if (i == q.Z) return q.X;  // new near-V_B point was computed in the X slot
    if (i == q.W) return q.Y;
    if (i == q.X) return q.W;
    if (i == q.Y) return q.Z;
    return i;
  };
  int n = source.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (target.eps[i][j] != composed.target.eps[tau(i)][tau(j)])
        throw std::logic_error("flip_via_mutations: exchange matrix mismatch after relabeling");

  std::vector<RatFunc> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) images.push_back(composed.images[tau(i)]);

  return FlipResult{std::move(new_tri), ClusterMap{std::move(source), std::move(target),
                                                   std::move(images)}};
}

// The duality involution. Every triangle center is inverted, and each
// internal edge's pair of points is swapped with corrections from the two
// adjacent centers:
//   Z' = W (1+Y) / (Y (1+X)),  W' = Z (1+X) / (X (1+Y)),  X' = X^{-1},
// with X the center of the triangle traversing the edge against its
// orientation and Y the one along it. This is the coordinate action of
// projective duality on inscribed polygon pairs (points and sides swap);
// it squares to the identity, preserves the Poisson bracket on every
// boundaryless triangulation, and commutes with flips. Boundary-edge
// points (window kind) are left untouched.
inline ClusterMap sigma_involution(const Triangulation& tri) {
  Seed seed = epsilon_of_triangulation(tri);
  int n = seed.size();
  std::vector<RatFunc> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) images.push_back(RatFunc::variable(n, i));
  RatFunc one = RatFunc::constant(n, 1);

  for (int e = 0; e < tri.n_edges; ++e) {
    if (!tri.edge_has_points(e)) continue;
    if (!tri.edge_boundary.empty() && tri.edge_boundary[e]) continue;
    auto s = tri.sides_of_edge(e);
    if (s.count != 2) continue;
    RatFunc x = RatFunc::variable(n, tri.center_of(s.t_neg));
    RatFunc y = RatFunc::variable(n, tri.center_of(s.t_pos));
    RatFunc z = RatFunc::variable(n, tri.point_at(e, 0));
    RatFunc w = RatFunc::variable(n, tri.point_at(e, 1));
    images[tri.point_at(e, 0)] = w * (one + y) / (y * (one + x));
    images[tri.point_at(e, 1)] = z * (one + x) / (x * (one + y));
  }
  for (int t = 0; t < static_cast<int>(tri.tris.size()); ++t)
    images[tri.center_of(t)] = RatFunc::variable(n, tri.center_of(t)).pow(-1);

  return ClusterMap{seed, seed, std::move(images)};
}

// ---------------------------------------------------------------------------
// Flip connectivity for polygon triangulations.

namespace detail {

inline std::string diagonal_key(const Triangulation& tri) {
  std::vector<std::pair<int, int>> ds;
  for (int e = 0; e < tri.n_edges; ++e)
    if (!tri.edge_boundary[e])
      ds.push_back({std::min(tri.edge_ends[e][0], tri.edge_ends[e][1]),
                    std::max(tri.edge_ends[e][0], tri.edge_ends[e][1])});
  std::sort(ds.begin(), ds.end());
  std::string key;
  for (auto& [a, b] : ds) key += std::to_string(a) + "-" + std::to_string(b) + ";";
  return key;
}

}  // namespace detail

// Breadth-first search in the flip graph from `from` to the triangulation
// with the given diagonals; returns the edge ids to flip in order.
inline std::vector<int> flip_route(const Triangulation& from,
                                   const std::vector<std::array<int, 2>>& target_diagonals,
                                   int cap = 10000) {
  if (from.kind == TriKind::Surface)
    throw std::invalid_argument("flip_route: polygon triangulations only");
  std::string goal = detail::diagonal_key(
      polygon_triangulation(from.polygon_n, target_diagonals, from.kind == TriKind::PolygonWindow));

  std::set<std::string> seen;
  std::queue<std::pair<Triangulation, std::vector<int>>> frontier;
  seen.insert(detail::diagonal_key(from));
  frontier.push({from, {}});
  if (detail::diagonal_key(from) == goal) return {};

  while (!frontier.empty()) {
    auto [tri, path] = frontier.front();
    frontier.pop();
    for (int e = 0; e < tri.n_edges; ++e) {
      if (tri.edge_boundary[e]) continue;
      QuadSlots q = quad_slots(tri, e);
      Triangulation next = detail::flipped_triangulation(tri, e, q);
      std::string key = detail::diagonal_key(next);
      std::vector<int> next_path = path;
      next_path.push_back(e);
      if (key == goal) return next_path;
      if (seen.count(key)) continue;
      if (static_cast<int>(seen.size()) >= cap)
        throw std::runtime_error("flip_route: search exceeded cap");
      seen.insert(key);
      frontier.push({next, std::move(next_path)});
    }
  }
  throw std::runtime_error("flip_route: target not reachable");
}

}  // namespace xcv
