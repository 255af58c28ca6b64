#pragma once

// Combinatorial triangulations carrying marked points and their exchange
// matrices. Three flavors share one structure: ideal triangulations of
// punctured surfaces (every edge internal, vertices are punctures),
// triangulated polygons where only diagonals carry coordinate points, and
// triangulated polygons where every edge does (used for windows into the
// Farey tessellation).
//
// Marked points: two per coordinate-carrying edge (one near each end) and
// one per triangle center. The exchange matrix is assembled per triangle:
// walking the sides counterclockwise, each side's start point is "near"
// and its end point is "far", and the triangle contributes
//   eps(center, far)   = +1
//   eps(center, near)  = -1
//   eps(far_i, near_{i+1}) = +1
// for each side i, indices mod 3. Contributions from the two triangles of
// an internal edge add up, so entries can reach +-2 on self-glued shapes.

#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "seed.hpp"

namespace xcv {

struct TriSide {
  int edge = -1;
  int dir = +1;  // +1: traversal runs from edge end 0 to end 1
};

struct Triangle {
  std::array<TriSide, 3> side;  // counterclockwise
};

enum class TriKind { Surface, PolygonInterior, PolygonWindow };

struct Triangulation {
  TriKind kind = TriKind::PolygonInterior;
  std::vector<Triangle> tris;
  int n_edges = 0;
  std::vector<std::array<int, 2>> edge_ends;  // vertex ids per end (polygon corners or punctures)
  std::vector<bool> edge_boundary;            // polygon sides (never in Surface kind)

  int polygon_n = 0;  // polygon kinds
  int genus = -1, punctures = -1;  // surface kind
  std::vector<std::string> vertex_labels;  // optional display labels (Farey fractions)

  // Marked points, indexed deterministically: for each edge (ascending id)
  // the end-0 point then the end-1 point when the edge carries points,
  // then one center per triangle (ascending id).
  std::vector<int> edge_point;  // 2 * n_edges entries, seed index or -1
  std::vector<int> center_point;  // per triangle
  std::vector<std::string> point_names;

  bool edge_has_points(int e) const {
    return kind != TriKind::PolygonInterior || !edge_boundary[e];
  }
  int point_at(int e, int end) const { return edge_point[2 * e + end]; }
  int center_of(int t) const { return center_point[t]; }
  int n_points() const { return static_cast<int>(point_names.size()); }

  // Adjacency of an edge: (triangle, side position) for dir +1 and -1.
  struct EdgeSides {
    int t_pos = -1, k_pos = -1;
    int t_neg = -1, k_neg = -1;
    int count = 0;
  };
  EdgeSides sides_of_edge(int e) const {
    EdgeSides r;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
      for (int k = 0; k < 3; ++k) {
        if (tris[t].side[k].edge != e) continue;
        ++r.count;
        if (tris[t].side[k].dir > 0) {
          r.t_pos = t;
          r.k_pos = k;
        } else {
          r.t_neg = t;
          r.k_neg = k;
        }
      }
    return r;
  }

  // Vertex id at the traversal start / end of a side.
  int side_start(int t, int k) const {
    const TriSide& s = tris[t].side[k];
    return edge_ends[s.edge][s.dir > 0 ? 0 : 1];
  }
  int side_end(int t, int k) const {
    const TriSide& s = tris[t].side[k];
    return edge_ends[s.edge][s.dir > 0 ? 1 : 0];
  }
  // Marked point at the traversal start / end of a side (-1 if absent).
  int side_start_point(int t, int k) const {
    const TriSide& s = tris[t].side[k];
    return point_at(s.edge, s.dir > 0 ? 0 : 1);
  }
  int side_end_point(int t, int k) const {
    const TriSide& s = tris[t].side[k];
    return point_at(s.edge, s.dir > 0 ? 1 : 0);
  }
};

namespace detail {

// The token naming the near-vertex of an edge point. Polygons use the
// corner id; on a surface a loop edge may have both ends at one puncture,
// so the end index keeps names distinct.
inline std::string end_token(const Triangulation& tri, int e, int end) {
  if (tri.kind == TriKind::Surface) return std::to_string(end);
  return std::to_string(tri.edge_ends[e][end]);
}

inline void build_marked_points(Triangulation& tri) {
  tri.edge_point.assign(2 * tri.n_edges, -1);
  tri.center_point.assign(tri.tris.size(), -1);
  tri.point_names.clear();
  for (int e = 0; e < tri.n_edges; ++e) {
    if (!tri.edge_has_points(e)) continue;
    for (int end = 0; end < 2; ++end) {
      tri.edge_point[2 * e + end] = static_cast<int>(tri.point_names.size());
      tri.point_names.push_back("edge:" + std::to_string(e) + ":near:" + end_token(tri, e, end));
    }
  }
  for (int t = 0; t < static_cast<int>(tri.tris.size()); ++t) {
    tri.center_point[t] = static_cast<int>(tri.point_names.size());
    tri.point_names.push_back("tri:" + std::to_string(t) + ":center");
  }
}

// Refreshes names after combinatorial changes (a flip moves edge ends).
inline void refresh_point_names(Triangulation& tri) {
  for (int e = 0; e < tri.n_edges; ++e)
    for (int end = 0; end < 2; ++end) {
      int p = tri.edge_point[2 * e + end];
      if (p >= 0)
        tri.point_names[p] = "edge:" + std::to_string(e) + ":near:" + end_token(tri, e, end);
    }
}

}  // namespace detail

// Exchange matrix of the triangulation on its marked points.
inline Seed epsilon_of_triangulation(const Triangulation& tri) {
  Seed s(tri.point_names);
  auto add = [&](int i, int j, int v) {
    if (i < 0 || j < 0) return;
    s.eps[i][j] += v;
    s.eps[j][i] -= v;
  };
  for (int t = 0; t < static_cast<int>(tri.tris.size()); ++t) {
    int c = tri.center_of(t);
    std::array<int, 3> near_pt, far_pt;
    for (int k = 0; k < 3; ++k) {
      near_pt[k] = tri.side_start_point(t, k);
      far_pt[k] = tri.side_end_point(t, k);
    }
    for (int k = 0; k < 3; ++k) {
      add(c, far_pt[k], +1);
      add(c, near_pt[k], -1);
      add(far_pt[k], near_pt[(k + 1) % 3], +1);
    }
  }
  return s;
}

// Counts vertex classes by gluing side endpoints at triangle corners.
inline int count_vertex_cycles(const Triangulation& tri) {
  // Union-find over (edge, end) slots.
  std::vector<int> parent(2 * tri.n_edges);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto end_slot = [&](int t, int k, bool start) {
    const TriSide& s = tri.tris[t].side[k];
    int end = (s.dir > 0) == start ? 0 : 1;
    return 2 * s.edge + end;
  };
  for (int t = 0; t < static_cast<int>(tri.tris.size()); ++t)
    for (int k = 0; k < 3; ++k)
      unite(end_slot(t, k, false), end_slot(t, (k + 1) % 3, true));  // shared corner
  std::set<int> roots;
  std::vector<bool> used(2 * tri.n_edges, false);
  for (int t = 0; t < static_cast<int>(tri.tris.size()); ++t)
    for (int k = 0; k < 3; ++k) {
      used[end_slot(t, k, true)] = true;
      used[end_slot(t, k, false)] = true;
    }
  for (int i = 0; i < 2 * tri.n_edges; ++i)
    if (used[i]) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

// Structural checks; throws std::invalid_argument with a description.
inline void validate_triangulation(const Triangulation& tri) {
  for (int e = 0; e < tri.n_edges; ++e) {
    auto s = tri.sides_of_edge(e);
    bool boundary = e < static_cast<int>(tri.edge_boundary.size()) && tri.edge_boundary[e];
    if (tri.kind == TriKind::Surface && boundary)
      throw std::invalid_argument("surface triangulation cannot have boundary edges");
    if (boundary) {
      if (s.count != 1)
        throw std::invalid_argument("boundary edge " + std::to_string(e) +
                                    " must bound exactly one triangle");
    } else {
      if (s.count != 2 || s.t_pos < 0 || s.t_neg < 0)
        throw std::invalid_argument(
            "internal edge " + std::to_string(e) +
            " must be traversed once in each direction by adjacent triangles");
    }
  }
  if (tri.kind == TriKind::Surface) {
    int g = tri.genus, s = tri.punctures;
    if (s < 1 || (g == 0 && s < 3))
      throw std::invalid_argument("surface must have a puncture (three if genus zero)");
    int abs_chi = 2 * g - 2 + s;
    if (abs_chi <= 0) throw std::invalid_argument("surface does not admit an ideal triangulation");
    if (tri.n_edges != 3 * abs_chi)
      throw std::invalid_argument("edge count must be 3|chi|");
    if (static_cast<int>(tri.tris.size()) != 2 * abs_chi)
      throw std::invalid_argument("triangle count must be 2|chi|");
    if (count_vertex_cycles(tri) != s)
      throw std::invalid_argument("vertex cycles must match the puncture count");
  } else {
    if (tri.polygon_n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    int n = tri.polygon_n;
    if (static_cast<int>(tri.tris.size()) != n - 2)
      throw std::invalid_argument("polygon triangulation must have n-2 triangles");
    if (tri.n_edges != 2 * n - 3) throw std::invalid_argument("polygon must have 2n-3 edges");
  }
}

// ---------------------------------------------------------------------------
// Polygon constructors.

namespace detail {

// Planar face tracing for a convex polygon with non-crossing chords:
// vertices 0..n-1 sit counterclockwise on a circle. Returns the inner
// faces as sequences of directed edge indices.
struct PolyFaces {
  std::vector<std::vector<std::pair<int, bool>>> faces;  // (edge id, runs end0->end1)
};

inline PolyFaces trace_polygon_faces(int n, const std::vector<std::array<int, 2>>& edges) {
  // Darts: 2 per edge; dart 2e is end0 -> end1, dart 2e+1 the reverse.
  int m = static_cast<int>(edges.size());
  auto dart_from = [&](int d) { return edges[d / 2][d % 2]; };
  auto dart_to = [&](int d) { return edges[d / 2][1 - d % 2]; };

  // Order darts leaving each vertex counterclockwise by arc position of
  // the target (exact integer comparison).
  std::vector<std::vector<int>> out(n);
  for (int d = 0; d < 2 * m; ++d) out[dart_from(d)].push_back(d);
  for (int v = 0; v < n; ++v) {
    std::sort(out[v].begin(), out[v].end(), [&](int a, int b) {
      int pa = (dart_to(a) - v + n) % n;
      int pb = (dart_to(b) - v + n) % n;
      return pa < pb;
    });
  }
  // next(d): the dart after d in its face, for counterclockwise inner
  // faces: reverse d, then step one position clockwise around its vertex.
  std::vector<int> pos(2 * m);
  for (int v = 0; v < n; ++v)
    for (size_t i = 0; i < out[v].size(); ++i) pos[out[v][i]] = static_cast<int>(i);
  auto next_dart = [&](int d) {
    int rev = d ^ 1;
    int v = dart_from(rev);
    int i = pos[rev];
    int sz = static_cast<int>(out[v].size());
    return out[v][(i - 1 + sz) % sz];
  };

  PolyFaces pf;
  std::vector<bool> seen(2 * m, false);
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (seen[d0]) continue;
    std::vector<std::pair<int, bool>> face;
    int arcs = 0;
    int d = d0;
    do {
      seen[d] = true;
      face.push_back({d / 2, d % 2 == 0});
      arcs += (dart_to(d) - dart_from(d) + n) % n;
      d = next_dart(d);
    } while (d != d0);
    if (arcs == n) pf.faces.push_back(std::move(face));  // counterclockwise = inner
  }
  return pf;
}

}  // namespace detail

// Triangulated convex n-gon. `diagonals` lists the chords; when empty a fan
// at vertex 0 is used. Edge ids: sides (i, i+1 mod n) get ids 0..n-1, then
// the diagonals in the given order.
inline Triangulation polygon_triangulation(int n, std::vector<std::array<int, 2>> diagonals = {},
                                           bool window = false) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  if (diagonals.empty())
    for (int i = 2; i + 1 < n; ++i) diagonals.push_back({0, i});
  if (static_cast<int>(diagonals.size()) != n - 3)
    throw std::invalid_argument("a triangulated n-gon has n-3 diagonals");

  Triangulation tri;
  tri.kind = window ? TriKind::PolygonWindow : TriKind::PolygonInterior;
  tri.polygon_n = n;
  for (int i = 0; i < n; ++i) {
    tri.edge_ends.push_back({i, (i + 1) % n});
    tri.edge_boundary.push_back(true);
  }
  for (auto& d : diagonals) {
    if (d[0] == d[1] || d[0] < 0 || d[1] < 0 || d[0] >= n || d[1] >= n ||
        (d[1] - d[0] + n) % n == 1 || (d[0] - d[1] + n) % n == 1)
      throw std::invalid_argument("bad diagonal");
    tri.edge_ends.push_back({d[0], d[1]});
    tri.edge_boundary.push_back(false);
  }
  tri.n_edges = static_cast<int>(tri.edge_ends.size());

  auto faces = detail::trace_polygon_faces(n, tri.edge_ends);
  for (auto& f : faces.faces) {
    if (f.size() != 3) throw std::invalid_argument("diagonals do not triangulate the polygon");
    Triangle t;
    for (int k = 0; k < 3; ++k) t.side[k] = {f[k].first, f[k].second ? +1 : -1};
    tri.tris.push_back(t);
  }
  detail::build_marked_points(tri);
  validate_triangulation(tri);
  return tri;
}

// ---------------------------------------------------------------------------
// Surface constructors (fixed small gluings).

namespace detail {

inline Triangulation make_surface(int genus, int punctures, int n_edges,
                                  std::vector<Triangle> tris) {
  Triangulation tri;
  tri.kind = TriKind::Surface;
  tri.genus = genus;
  tri.punctures = punctures;
  tri.n_edges = n_edges;
  tri.tris = std::move(tris);
  tri.edge_boundary.assign(n_edges, false);
  tri.edge_ends.assign(n_edges, {0, 0});  // refreshed from vertex cycles below

  // Identify each edge end with its vertex cycle id for bookkeeping.
  std::vector<int> parent(2 * n_edges);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto end_slot = [&](int t, int k, bool start) {
    const TriSide& s = tri.tris[t].side[k];
    int end = (s.dir > 0) == start ? 0 : 1;
    return 2 * s.edge + end;
  };
  for (int t = 0; t < static_cast<int>(tri.tris.size()); ++t)
    for (int k = 0; k < 3; ++k)
      parent[find(end_slot(t, k, false))] = find(end_slot(t, (k + 1) % 3, true));
  std::map<int, int> root_id;
  for (int i = 0; i < 2 * n_edges; ++i) {
    int r = find(i);
    if (!root_id.count(r)) root_id[r] = static_cast<int>(root_id.size());
    tri.edge_ends[i / 2][i % 2] = root_id[r];
  }

  build_marked_points(tri);
  validate_triangulation(tri);
  return tri;
}

}  // namespace detail

// Once-punctured torus: a square with opposite sides glued, cut along a
// diagonal. Edges 0, 1 are the square's sides, edge 2 the diagonal.
inline Triangulation torus_one_puncture() {
  std::vector<Triangle> tris(2);
  tris[0].side = {TriSide{0, +1}, TriSide{1, +1}, TriSide{2, -1}};
  tris[1].side = {TriSide{2, +1}, TriSide{0, -1}, TriSide{1, -1}};
  return detail::make_surface(1, 1, 3, std::move(tris));
}

// Thrice-punctured sphere: two triangles glued along their boundaries.
inline Triangulation sphere_three_punctures() {
  std::vector<Triangle> tris(2);
  tris[0].side = {TriSide{0, +1}, TriSide{1, +1}, TriSide{2, +1}};
  tris[1].side = {TriSide{0, -1}, TriSide{2, -1}, TriSide{1, -1}};
  return detail::make_surface(0, 3, 3, std::move(tris));
}

// Twice-punctured torus: the glued square of the one-puncture case with an
// extra vertex at the square's center joined to all four corners. Edges:
// 0 horizontal side, 1 vertical side, 2..5 the spokes from the corners
// (bottom-left, bottom-right, top-right, top-left) to the center.
inline Triangulation torus_two_punctures() {
  std::vector<Triangle> tris(4);
  tris[0].side = {TriSide{0, +1}, TriSide{3, +1}, TriSide{2, -1}};  // bottom
  tris[1].side = {TriSide{1, +1}, TriSide{4, +1}, TriSide{3, -1}};  // right
  tris[2].side = {TriSide{0, -1}, TriSide{5, +1}, TriSide{4, -1}};  // top
  tris[3].side = {TriSide{1, -1}, TriSide{2, +1}, TriSide{5, -1}};  // left
  return detail::make_surface(1, 2, 6, std::move(tris));
}

inline Triangulation surface_triangulation(int genus, int punctures) {
  if (genus == 1 && punctures == 1) return torus_one_puncture();
  if (genus == 0 && punctures == 3) return sphere_three_punctures();
  if (genus == 1 && punctures == 2) return torus_two_punctures();
  throw std::invalid_argument("no built-in triangulation for genus " + std::to_string(genus) +
                              " with " + std::to_string(punctures) + " punctures");
}

}  // namespace xcv
