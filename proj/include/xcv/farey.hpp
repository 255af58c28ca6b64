#pragma once

// Finite windows of the Farey triangulation of the disk. Vertices are the
// reduced fractions p/q on the boundary circle (q >= 0, with 1/0 for the
// point at infinity); two fractions span an edge exactly when |ps - qr| = 1,
// and the two triangles over an edge have apexes (p+r)/(q+s), (p-r)/(q-s).
// farey_window(depth) cuts out every triangle within the given dual-graph
// distance of the base edge (0, infinity) and returns it as a triangulated
// polygon window whose boundary edges still carry marked points, so the
// window embeds in the full tessellation. Flipping a window diagonal is the
// elementary move of the Thompson group; the flipped diagonal generally
// joins non-adjacent fractions, i.e. leaves the Farey tessellation.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "xcv/triangulation.hpp"

namespace xcv {

struct FareyFraction {
  mpz_class num = 0;
  mpz_class den = 1;

  FareyFraction() = default;
  FareyFraction(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0 && num == 0) throw std::invalid_argument("0/0 is not a boundary point");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (den == 0) {
      num = 1;  // the point at infinity, normalized to 1/0
      return;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  FareyFraction(long n, long d) : FareyFraction(mpz_class(n), mpz_class(d)) {}

  bool is_infinity() const { return den == 0; }

  // "p/q", plain integers without the /1, and "inf" for 1/0.
  std::string label() const {
    if (is_infinity()) return "inf";
    if (den == 1) return num.get_str();
    return num.get_str() + "/" + den.get_str();
  }

  friend bool operator==(const FareyFraction& a, const FareyFraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const FareyFraction& a, const FareyFraction& b) { return !(a == b); }
  // Order by value with infinity greatest, matching the circular order of
  // the disk boundary read counterclockwise from just past infinity.
  friend bool operator<(const FareyFraction& a, const FareyFraction& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return a.num * b.den < b.num * a.den;
  }
};

inline FareyFraction farey_infinity() { return FareyFraction(1, 0); }

// Parse "p/q", "n", or "inf" (also accepts "oo").
inline FareyFraction farey_parse(const std::string& text) {
  if (text == "inf" || text == "oo") return farey_infinity();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return FareyFraction(mpz_class(text), 1);
    return FareyFraction(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a fraction: " + text);
  }
}

inline bool farey_adjacent(const FareyFraction& a, const FareyFraction& b) {
  mpz_class cross = a.num * b.den - a.den * b.num;
  return cross == 1 || cross == -1;
}

inline FareyFraction mediant(const FareyFraction& a, const FareyFraction& b) {
  return FareyFraction(a.num + b.num, a.den + b.den);
}

// The apexes of the two Farey triangles over the edge {a, b}. Both are
// automatically reduced: any common factor of a mediant would divide the
// unit cross-determinant of the edge.
inline std::array<FareyFraction, 2> farey_neighbors(const FareyFraction& a,
                                                    const FareyFraction& b) {
  if (!farey_adjacent(a, b)) throw std::invalid_argument("not a Farey edge");
  return {FareyFraction(a.num + b.num, a.den + b.den),
          FareyFraction(a.num - b.num, a.den - b.den)};
}

// The polygon window of all Farey triangles within `depth` dual steps of the
// base edge (0, infinity): depth 0 is the two triangles on that edge, and
// each further level glues the outward neighbor onto every exposed edge.
// Vertices are indexed in increasing order of value (infinity last), which
// is the counterclockwise boundary order, and labeled by FareyFraction::label.
inline Triangulation farey_window(int depth) {
  if (depth < 0) throw std::invalid_argument("farey_window: depth must be >= 0");

  std::vector<std::array<FareyFraction, 3>> tris;
  auto grow = [&tris](const FareyFraction& u, const FareyFraction& v,
                      const FareyFraction& from_apex, int d, auto&& self) -> void {
    auto apexes = farey_neighbors(u, v);
    const FareyFraction& apex = (apexes[0] == from_apex) ? apexes[1] : apexes[0];
    tris.push_back({u, v, apex});
    if (d > 0) {
      self(u, apex, v, d - 1, self);
      self(apex, v, u, d - 1, self);
    }
  };

  FareyFraction zero(0, 1), inf = farey_infinity(), one(1, 1), minus_one(-1, 1);
  tris.push_back({zero, inf, one});
  tris.push_back({zero, inf, minus_one});
  if (depth > 0) {
    grow(zero, one, inf, depth - 1, grow);
    grow(one, inf, zero, depth - 1, grow);
    grow(zero, minus_one, inf, depth - 1, grow);
    grow(minus_one, inf, zero, depth - 1, grow);
  }

  std::map<FareyFraction, int> index;
  for (const auto& t : tris)
    for (const auto& v : t) index.emplace(v, 0);
  int n = 0;
  for (auto& [frac, id] : index) id = n++;

  std::vector<std::array<int, 2>> diagonals;
  for (const auto& t : tris)
    for (int k = 0; k < 3; ++k) {
      int i = index.at(t[k]), j = index.at(t[(k + 1) % 3]);
      if (i > j) std::swap(i, j);
      if (j - i == 1 || (i == 0 && j == n - 1)) continue;  // polygon side
      diagonals.push_back({i, j});
    }
  std::sort(diagonals.begin(), diagonals.end());
  diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());

  Triangulation window = polygon_triangulation(n, diagonals, /*window=*/true);
  window.vertex_labels.resize(n);
  for (const auto& [frac, id] : index) window.vertex_labels[id] = frac.label();
  return window;
}

}  // namespace xcv
