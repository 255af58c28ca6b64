#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "xcv/flip.hpp"
#include "xcv/polygon_pair.hpp"

using namespace xcv;

namespace {

std::vector<Rat> eval_map(const ClusterMap& m, const std::vector<Rat>& v) {
  std::vector<Rat> out;
  out.reserve(m.images.size());
  for (const RatFunc& f : m.images) out.push_back(f.eval(v));
  return out;
}

CoordinateAssignment quad_values(const Triangulation& t4, long z, long w, long x, long y) {
  CoordinateAssignment vals(t4.n_points(), Rat(0));
  vals[t4.point_at(4, 0)] = Rat(z);
  vals[t4.point_at(4, 1)] = Rat(w);
  vals[t4.center_of(0)] = Rat(x);
  vals[t4.center_of(1)] = Rat(y);
  return vals;
}

CoordinateAssignment pentagon_values(const Triangulation& t5) {
  CoordinateAssignment vals(t5.n_points(), Rat(0));
  vals[t5.point_at(5, 0)] = Rat(2);
  vals[t5.point_at(5, 1)] = Rat(3);
  vals[t5.point_at(6, 0)] = Rat(5);
  vals[t5.point_at(6, 1)] = Rat(7);
  vals[t5.center_of(0)] = Rat(11);
  vals[t5.center_of(1)] = Rat(13);
  vals[t5.center_of(2)] = Rat(17);
  return vals;
}

bool pairs_agree(const PolygonPair& a, const PolygonPair& b) {
  if (a.n() != b.n()) return false;
  for (int i = 0; i < a.n(); ++i)
    if (!same_point(a.vertices[i], b.vertices[i]) || !same_line(a.sides[i], b.sides[i]))
      return false;
  return true;
}

}  // namespace

TEST_CASE("conic inscribed pairs give unit and self-dual coordinates") {
  PolygonPair tri_pair = conic_polygon_pair({Rat(0), Rat(1), Rat(2)});
  CHECK(tri_pair.is_valid());
  CHECK(triple_ratio(tri_pair.flag(0), tri_pair.flag(1), tri_pair.flag(2)) == Rat(1));
  Triangulation t3 = polygon_triangulation(3);
  CoordinateAssignment tri_vals = coords_of_polygon_pair(tri_pair, t3);
  REQUIRE(tri_vals.size() == 1);
  CHECK(tri_vals[0] == Rat(1));

  Triangulation t4 = polygon_triangulation(4, {{0, 2}});
  PolygonPair quad = conic_polygon_pair({Rat(0), Rat(1), Rat(2), Rat(3)});
  CHECK(quad.is_valid());
  CoordinateAssignment vals = coords_of_polygon_pair(quad, t4);
  CHECK(vals[t4.point_at(4, 0)] == rat_make(1, 3));
  CHECK(vals[t4.point_at(4, 1)] == rat_make(1, 3));
  CHECK(vals[t4.center_of(0)] == Rat(1));
  CHECK(vals[t4.center_of(1)] == Rat(1));

  // Equal edge coordinates and unit centers sit on the fixed locus of the
  // side-swap involution, so dualizing reproduces the same coordinates.
  CHECK(coords_of_polygon_pair(dual_polygon_pair(quad), t4) == vals);
  CHECK(eval_map(sigma_involution(t4), vals) == vals);

  CHECK_THROWS_AS(conic_polygon_pair({Rat(0), Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(conic_polygon_pair({Rat(0), Rat(2), Rat(1)}), std::invalid_argument);
}

TEST_CASE("quadrilateral coordinates round-trip exactly") {
  Triangulation t4 = polygon_triangulation(4, {{0, 2}});
  CoordinateAssignment vals = quad_values(t4, 2, 3, 5, 7);
  PolygonPair pp = polygon_pair_from_coords(vals, t4);
  CHECK(pp.is_valid());
  CHECK(coords_of_polygon_pair(pp, t4) == vals);

  // The same pair read through the other diagonal still reconstructs.
  Triangulation other = polygon_triangulation(4, {{1, 3}});
  CoordinateAssignment through_other = coords_of_polygon_pair(pp, other);
  for (const Rat& v : through_other) CHECK(v > 0);
  PolygonPair again = polygon_pair_from_coords(through_other, other);
  CHECK(coords_of_polygon_pair(again, t4) == vals);
}

TEST_CASE("reconstruction round-trips on fans of every size") {
  std::mt19937_64 rng(514229);
  std::uniform_int_distribution<int> num(1, 12), den(1, 12);
  for (int n = 3; n <= 6; ++n) {
    Triangulation tri = polygon_triangulation(n);
    for (int trial = 0; trial < 8; ++trial) {
      CoordinateAssignment vals(tri.n_points(), Rat(0));
      for (Rat& v : vals) v = rat_make(num(rng), den(rng));
      PolygonPair pp = polygon_pair_from_coords(vals, tri);
      CHECK(pp.is_valid());
      CHECK(coords_of_polygon_pair(pp, tri) == vals);
    }
  }
}

TEST_CASE("projective duality is an exact involution") {
  Triangulation t4 = polygon_triangulation(4, {{0, 2}});
  PolygonPair pp = polygon_pair_from_coords(quad_values(t4, 2, 3, 5, 7), t4);
  PolygonPair dp = dual_polygon_pair(pp);
  CHECK(dp.is_valid());
  CHECK(!pairs_agree(dp, pp));
  CHECK(pairs_agree(dual_polygon_pair(dp), pp));
}

TEST_CASE("duality acts on coordinates by the side-swap involution") {
  Triangulation t4 = polygon_triangulation(4, {{0, 2}});
  CoordinateAssignment vals = quad_values(t4, 2, 3, 5, 7);
  PolygonPair pp = polygon_pair_from_coords(vals, t4);
  CoordinateAssignment dvals = coords_of_polygon_pair(dual_polygon_pair(pp), t4);

  // Z' = W(1+Y)/(Y(1+X)), W' = Z(1+X)/(X(1+Y)), centers invert.
  CHECK(dvals[t4.point_at(4, 0)] == rat_make(4, 7));
  CHECK(dvals[t4.point_at(4, 1)] == rat_make(3, 10));
  CHECK(dvals[t4.center_of(0)] == rat_make(1, 5));
  CHECK(dvals[t4.center_of(1)] == rat_make(1, 7));
  CHECK(dvals == eval_map(sigma_involution(t4), vals));

  Triangulation t5 = polygon_triangulation(5);
  CoordinateAssignment pvals = pentagon_values(t5);
  PolygonPair pent = polygon_pair_from_coords(pvals, t5);
  CoordinateAssignment pdual = coords_of_polygon_pair(dual_polygon_pair(pent), t5);
  CHECK(pdual[t5.point_at(5, 0)] == rat_make(7, 26));
  CHECK(pdual[t5.point_at(6, 1)] == rat_make(35, 117));
  CHECK(pdual == eval_map(sigma_involution(t5), pvals));
}

TEST_CASE("duality commutes with diagonal flips at the value level") {
  Triangulation t4 = polygon_triangulation(4, {{0, 2}});
  CoordinateAssignment vals = quad_values(t4, 2, 3, 5, 7);
  PolygonPair pp = polygon_pair_from_coords(vals, t4);
  PolygonPair dp = dual_polygon_pair(pp);
  FlipResult f4 = flip_closed_form(t4, 4);
  CoordinateAssignment geo = coords_of_polygon_pair(pp, f4.tri);
  CHECK(eval_map(sigma_involution(f4.tri), geo) == coords_of_polygon_pair(dp, f4.tri));

  Triangulation t5 = polygon_triangulation(5);
  PolygonPair pent = polygon_pair_from_coords(pentagon_values(t5), t5);
  PolygonPair pent_dual = dual_polygon_pair(pent);
  for (int e : {5, 6}) {
    FlipResult f = flip_closed_form(t5, e);
    CoordinateAssignment on_flipped = coords_of_polygon_pair(pent, f.tri);
    CHECK(eval_map(sigma_involution(f.tri), on_flipped) ==
          coords_of_polygon_pair(pent_dual, f.tri));
  }
}

TEST_CASE("positive coordinates certify convex pairs and conversely") {
  // Canonical triangle pair parameterized by its ratio: convex exactly for
  // positive values.
  auto canonical_triangle = [](const Rat& x) {
    PolygonPair pp;
    pp.vertices = {ProjPoint(Rat(1), Rat(-1), Rat(1)), ProjPoint(Rat(0), Rat(0), Rat(1)),
                   ProjPoint(Rat(1), Rat(0), Rat(0))};
    pp.sides = {ProjLine(Rat(1), Rat(1) + x, x), ProjLine(Rat(1), Rat(0), Rat(0)),
                ProjLine(Rat(0), Rat(0), Rat(1))};
    return pp;
  };
  Triangulation t3 = polygon_triangulation(3);
  CHECK(canonical_triangle(Rat(2)).is_valid());
  CHECK(coords_of_polygon_pair(canonical_triangle(Rat(2)), t3)[0] == Rat(2));
  CHECK(!canonical_triangle(rat_make(-1, 2)).is_valid());
  CHECK(coords_of_polygon_pair(canonical_triangle(rat_make(-1, 2)), t3)[0] < 0);

  // A crossed quadrilateral on the conic: still a flag configuration, but
  // not a convex pair, and its edge coordinates go negative.
  PolygonPair crossed;
  for (const Rat& t : {Rat(0), Rat(2), Rat(1), Rat(3)}) {
    crossed.vertices.push_back(conic_point(t));
    crossed.sides.push_back(conic_tangent(t));
  }
  CHECK(!crossed.is_valid());
  Triangulation t4 = polygon_triangulation(4, {{0, 2}});
  CoordinateAssignment cvals = coords_of_polygon_pair(crossed, t4);
  CHECK(cvals[t4.point_at(4, 0)] == rat_make(-4, 3));
  CHECK(cvals[t4.point_at(4, 1)] == rat_make(-4, 3));
}

TEST_CASE("rejects mismatched or degenerate coordinate input") {
  Triangulation t4 = polygon_triangulation(4, {{0, 2}});

  CHECK_THROWS_AS(polygon_pair_from_coords(CoordinateAssignment{Rat(1)}, t4),
                  std::invalid_argument);
  CoordinateAssignment with_zero = quad_values(t4, 2, 3, 5, 7);
  with_zero[0] = Rat(0);
  CHECK_THROWS_AS(polygon_pair_from_coords(with_zero, t4), std::invalid_argument);
  CoordinateAssignment negative = quad_values(t4, 2, 3, 5, 7);
  negative[2] = Rat(-1);
  CHECK_THROWS_AS(polygon_pair_from_coords(negative, t4), std::invalid_argument);

  // Coordinates are defined on interior polygon triangulations only.
  Triangulation window = polygon_triangulation(4, {{0, 2}}, true);
  CHECK_THROWS_AS(
      polygon_pair_from_coords(CoordinateAssignment(window.n_points(), Rat(1)), window),
      std::invalid_argument);
  Triangulation torus = torus_one_puncture();
  CHECK_THROWS_AS(
      polygon_pair_from_coords(CoordinateAssignment(torus.n_points(), Rat(1)), torus),
      std::invalid_argument);

  PolygonPair pp = polygon_pair_from_coords(quad_values(t4, 2, 3, 5, 7), t4);
  Triangulation t5 = polygon_triangulation(5);
  CHECK_THROWS_AS(coords_of_polygon_pair(pp, t5), std::invalid_argument);

  // A side through the opposite vertex is not in general position.
  PolygonPair bad = pp;
  bad.sides[0] = join(bad.vertices[0], bad.vertices[2]);
  CHECK(!bad.is_valid());
  CHECK_THROWS_AS(coords_of_polygon_pair(bad, t4), std::invalid_argument);

  PolygonPair tiny;
  tiny.vertices = {ProjPoint(Rat(1), Rat(0), Rat(0)), ProjPoint(Rat(0), Rat(1), Rat(0))};
  tiny.sides = {ProjLine(Rat(0), Rat(0), Rat(1)), ProjLine(Rat(0), Rat(0), Rat(1))};
  CHECK(!tiny.is_valid());
}

TEST_CASE("svg rendering emits both polygons") {
  PolygonPair pp = conic_polygon_pair({Rat(0), Rat(1), Rat(2), Rat(3)});
  std::string svg = polygon_pair_svg(pp);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
  std::string::size_type first = svg.find("<polygon");
  REQUIRE(first != std::string::npos);
  CHECK(svg.find("<polygon", first + 1) != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
}
