#include <catch2/catch_amalgamated.hpp>

#include "xcv/triangulation.hpp"

using namespace xcv;

TEST_CASE("triangulated square, window points") {
  Triangulation tri = polygon_triangulation(4, {{0, 2}}, true);
  CHECK(tri.polygon_n == 4);
  CHECK(tri.n_edges == 5);
  CHECK(tri.tris.size() == 2);
  // 2 points on each of 5 edges plus 2 centers.
  CHECK(tri.n_points() == 12);
  CHECK(tri.point_names[tri.point_at(4, 0)] == "edge:4:near:0");
  CHECK(tri.point_names[tri.point_at(4, 1)] == "edge:4:near:2");
  CHECK(tri.point_names[tri.center_of(0)] == "tri:0:center");
}

TEST_CASE("square exchange matrix matches the role table") {
  Triangulation tri = polygon_triangulation(4, {{0, 2}}, true);
  Seed s = epsilon_of_triangulation(tri);
  REQUIRE(s.skew_symmetric());

  // Quadrilateral roles: diagonal 0 -> 2, triangle (0,1,2) has center X,
  // triangle (0,2,3) center Y; side points (near, far) are (A,B) on
  // 0->1, (C,D) on 1->2, (E,F) on 2->3, (G,H) on 3->0; Z near 0 and W
  // near 2 on the diagonal.
  auto A = std::string("edge:0:near:0"), B = std::string("edge:0:near:1"),
       C = std::string("edge:1:near:1"), D = std::string("edge:1:near:2"),
       E = std::string("edge:2:near:2"), F = std::string("edge:2:near:3"),
       G = std::string("edge:3:near:3"), H = std::string("edge:3:near:0"),
       Z = std::string("edge:4:near:0"), W = std::string("edge:4:near:2"),
       X = std::string("tri:0:center"), Y = std::string("tri:1:center");

  std::map<std::pair<std::string, std::string>, int> expected{
      {{A, X}, +1}, {{A, Z}, -1}, {{B, C}, +1}, {{B, X}, -1}, {{C, X}, +1}, {{D, X}, -1},
      {{D, W}, +1}, {{E, Y}, +1}, {{E, W}, -1}, {{F, G}, +1}, {{F, Y}, -1}, {{G, Y}, +1},
      {{H, Y}, -1}, {{H, Z}, +1}, {{X, Z}, +1}, {{X, W}, -1}, {{Y, Z}, -1}, {{Y, W}, +1}};
  std::vector<std::string> all{A, B, C, D, E, F, G, H, X, Y, Z, W};
  for (auto& p : all)
    for (auto& q : all) {
      if (p == q) continue;
      int want = 0;
      if (expected.count({p, q})) want = expected[{p, q}];
      if (expected.count({q, p})) want = -expected[{q, p}];
      INFO(p << " vs " << q);
      CHECK(s.get_eps(p, q) == want);
    }
}

TEST_CASE("square interior seed is the oriented four cycle") {
  Triangulation tri = polygon_triangulation(4, {{0, 2}}, false);
  CHECK(tri.n_points() == 4);  // two diagonal points, two centers
  Seed s = epsilon_of_triangulation(tri);
  REQUIRE(s.skew_symmetric());
  CHECK(s.get_eps("tri:0:center", "edge:4:near:0") == +1);
  CHECK(s.get_eps("edge:4:near:0", "tri:1:center") == +1);
  CHECK(s.get_eps("tri:1:center", "edge:4:near:2") == +1);
  CHECK(s.get_eps("edge:4:near:2", "tri:0:center") == +1);
  CHECK(s.get_eps("tri:0:center", "tri:1:center") == 0);
  CHECK(s.get_eps("edge:4:near:0", "edge:4:near:2") == 0);
}

TEST_CASE("pentagon interior seed") {
  Triangulation tri = polygon_triangulation(5);  // fan at 0: diagonals (0,2), (0,3)
  CHECK(tri.n_points() == 7);
  Seed s = epsilon_of_triangulation(tri);
  REQUIRE(s.skew_symmetric());
  // Triangles (0,1,2), (0,2,3), (0,3,4) carry centers c1, c2, c3; the
  // diagonals carry (z1, w1) and (z2, w2), z near vertex 0.
  auto c1 = std::string("tri:0:center"), c2 = std::string("tri:1:center"),
       c3 = std::string("tri:2:center"), z1 = std::string("edge:5:near:0"),
       w1 = std::string("edge:5:near:2"), z2 = std::string("edge:6:near:0"),
       w2 = std::string("edge:6:near:3");
  std::map<std::pair<std::string, std::string>, int> expected{
      {{c1, z1}, +1}, {{c1, w1}, -1}, {{c2, z1}, -1}, {{c2, w1}, +1}, {{c2, z2}, +1},
      {{c2, w2}, -1}, {{c3, z2}, -1}, {{c3, w2}, +1}, {{z2, z1}, +1}};
  std::vector<std::string> all{c1, c2, c3, z1, w1, z2, w2};
  for (auto& p : all)
    for (auto& q : all) {
      if (p == q) continue;
      int want = 0;
      if (expected.count({p, q})) want = expected[{p, q}];
      if (expected.count({q, p})) want = -expected[{q, p}];
      INFO(p << " vs " << q);
      CHECK(s.get_eps(p, q) == want);
    }
}

TEST_CASE("pentagon window has seventeen points") {
  Triangulation tri = polygon_triangulation(5, {}, true);
  CHECK(tri.n_points() == 17);  // 7 edges * 2 + 3 centers
}

TEST_CASE("marked point counts are eight times the euler characteristic") {
  CHECK(torus_one_puncture().n_points() == 8);
  CHECK(sphere_three_punctures().n_points() == 8);
  CHECK(torus_two_punctures().n_points() == 16);
}

TEST_CASE("surface invariants") {
  for (auto [g, s] : {std::pair{1, 1}, std::pair{0, 3}, std::pair{1, 2}}) {
    Triangulation tri = surface_triangulation(g, s);
    int abs_chi = 2 * g - 2 + s;
    CHECK(tri.n_edges == 3 * abs_chi);
    CHECK(static_cast<int>(tri.tris.size()) == 2 * abs_chi);
    CHECK(count_vertex_cycles(tri) == s);
    Seed seed = epsilon_of_triangulation(tri);
    CHECK(seed.skew_symmetric());
  }
  CHECK_THROWS_AS(surface_triangulation(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(surface_triangulation(2, 1), std::invalid_argument);
}

TEST_CASE("torus exchange matrix entries") {
  Seed s = epsilon_of_triangulation(torus_one_puncture());
  // No ordered pair receives two contributions on this gluing, so all
  // entries are 0 or +-1.
  int max_abs = 0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) max_abs = std::max(max_abs, std::abs(s.eps[i][j]));
  CHECK(max_abs == 1);
  CHECK(s.get_eps("tri:0:center", "edge:0:near:1") == +1);
  CHECK(s.get_eps("tri:0:center", "edge:0:near:0") == -1);
  CHECK(s.get_eps("edge:0:near:1", "edge:1:near:0") == +1);
  CHECK(s.get_eps("tri:0:center", "tri:1:center") == 0);
  // Surface point names key off the end index, not the (single) puncture.
  Triangulation tri = torus_one_puncture();
  CHECK(tri.point_names[tri.point_at(0, 0)] == "edge:0:near:0");
  CHECK(tri.point_names[tri.point_at(0, 1)] == "edge:0:near:1");
}

TEST_CASE("sphere corner arrows from the two triangles can cancel") {
  Seed s = epsilon_of_triangulation(sphere_three_punctures());
  // Triangle 0 contributes eps(pt(2,1), pt(0,0)) = +1, triangle 1 the
  // opposite arrow, leaving zero.
  CHECK(s.get_eps("edge:2:near:1", "edge:0:near:0") == 0);
  CHECK(s.skew_symmetric());
}

TEST_CASE("broken gluings are rejected") {
  // An edge traversed twice in the same direction is not orientable.
  Triangulation bad;
  bad.kind = TriKind::Surface;
  bad.genus = 1;
  bad.punctures = 1;
  bad.n_edges = 3;
  bad.edge_boundary.assign(3, false);
  bad.edge_ends.assign(3, {0, 0});
  bad.tris.resize(2);
  bad.tris[0].side = {TriSide{0, +1}, TriSide{1, +1}, TriSide{2, +1}};
  bad.tris[1].side = {TriSide{0, +1}, TriSide{1, -1}, TriSide{2, -1}};
  CHECK_THROWS_AS(validate_triangulation(bad), std::invalid_argument);
}

TEST_CASE("polygon input validation") {
  CHECK_THROWS_AS(polygon_triangulation(2), std::invalid_argument);
  CHECK_THROWS_AS(polygon_triangulation(5, {{0, 2}}), std::invalid_argument);  // too few
  CHECK_THROWS_AS(polygon_triangulation(5, {{0, 1}, {0, 3}}), std::invalid_argument);  // side
  CHECK_THROWS_AS(polygon_triangulation(6, {{0, 2}, {1, 3}, {0, 4}}),
                  std::invalid_argument);  // crossing diagonals do not triangulate
  // A non-fan triangulation works.
  Triangulation hex = polygon_triangulation(6, {{1, 3}, {3, 5}, {5, 1}});
  CHECK(hex.tris.size() == 4);
  CHECK(hex.n_points() == 10);
}

TEST_CASE("triangle has no diagonals and one center") {
  Triangulation tri = polygon_triangulation(3);
  CHECK(tri.tris.size() == 1);
  CHECK(tri.n_points() == 1);
  Triangulation win = polygon_triangulation(3, {}, true);
  CHECK(win.n_points() == 7);
}
