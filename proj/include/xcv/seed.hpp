#pragma once

// Seeds and mutations for skew-symmetric exchange matrices, together with
// the rational coordinate transformations they induce and the compatible
// Poisson bracket. A ClusterMap records, for each coordinate of its target
// seed, the expression of that coordinate in the source seed's variables,
// so composition is substitution and a mutation's map points from the
// mutated seed back into the original function field.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratfunc.hpp"

namespace xcv {

struct Seed {
  std::vector<std::string> names;
  std::vector<std::vector<int>> eps;  // skew-symmetric, eps[i][j] = -eps[j][i]

  Seed() = default;
  explicit Seed(std::vector<std::string> vertex_names)
      : names(std::move(vertex_names)),
        eps(names.size(), std::vector<int>(names.size(), 0)) {}

  int size() const { return static_cast<int>(names.size()); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    throw std::invalid_argument("seed has no vertex named '" + name + "'");
  }

  void set_eps(int i, int j, int v) {
    eps.at(i).at(j) = v;
    eps.at(j).at(i) = -v;
  }
  void set_eps(const std::string& a, const std::string& b, int v) {
    set_eps(index_of(a), index_of(b), v);
  }
  int get_eps(const std::string& a, const std::string& b) const {
    return eps.at(index_of(a)).at(index_of(b));
  }

  bool skew_symmetric() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (eps[i][j] != -eps[j][i]) return false;
    return true;
  }

  bool operator==(const Seed& o) const { return names == o.names && eps == o.eps; }
  bool operator!=(const Seed& o) const { return !(*this == o); }
};

inline int sgn(int v) { return (v > 0) - (v < 0); }

// Exchange matrix mutation in direction k:
//   eps'_ij = -eps_ij                                  if k in {i, j},
//   eps'_ij = eps_ij + eps_ik * max(0, sgn(eps_ik) * eps_kj)  otherwise.
inline Seed mutate_epsilon(const Seed& s, int k) {
  Seed r = s;
  int n = s.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.eps[i][j] = -s.eps[i][j];
      } else {
        r.eps[i][j] = s.eps[i][j] + s.eps[i][k] * std::max(0, sgn(s.eps[i][k]) * s.eps[k][j]);
      }
    }
  return r;
}

// Coordinate transformation from a source seed's variables to a target
// seed's: images[i] expresses target coordinate i in source variables.
struct ClusterMap {
  Seed source;
  Seed target;
  std::vector<RatFunc> images;

  static ClusterMap identity(const Seed& s) {
    ClusterMap m{s, s, {}};
    m.images.reserve(s.size());
    for (int i = 0; i < s.size(); ++i) m.images.push_back(RatFunc::variable(s.size(), i));
    return m;
  }

  bool is_identity() const {
    if (source != target) return false;
    for (int i = 0; i < source.size(); ++i)
      if (images[i] != RatFunc::variable(source.size(), i)) return false;
    return true;
  }
};

// Replaces each source variable of f by the given expression; the vals
// live in some other variable ring of arity `out_arity`.
inline RatFunc substitute(const RatFunc& f, const std::vector<RatFunc>& vals, int out_arity) {
  if (static_cast<int>(vals.size()) != f.arity)
    throw std::invalid_argument("substitute: value count != arity");
  auto subst_laurent = [&](const Laurent& p) {
    RatFunc acc(out_arity);
    for (auto& [m, c] : p.terms) {
      RatFunc term = RatFunc::constant(out_arity, c);
      for (int i = 0; i < f.arity; ++i)
        if (m[i] != 0) term *= vals[i].pow(m[i]);
      acc += term;
    }
    return acc;
  };
  RatFunc d = subst_laurent(f.den);
  if (d.is_zero()) throw std::domain_error("substitute: denominator vanishes identically");
  return subst_laurent(f.num) / d;
}

// first, then second (so the result maps second.target coordinates into
// first.source variables).
inline ClusterMap compose(const ClusterMap& first, const ClusterMap& second) {
  if (first.target != second.source)
    throw std::invalid_argument("compose: middle seeds do not match");
  ClusterMap r{first.source, second.target, {}};
  r.images.reserve(second.images.size());
  for (const RatFunc& img : second.images)
    r.images.push_back(substitute(img, first.images, first.source.size()));
  return r;
}

// Reorders a map's target vertices to match the given name list (which
// must be a permutation of the target's names). Useful when a sequence of
// flips returns to a triangulation whose point names match the start but
// whose internal indices ended up permuted.
inline ClusterMap align_target_names(const ClusterMap& m, const std::vector<std::string>& names) {
  int n = m.target.size();
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("align_target_names: size mismatch");
  std::vector<int> to_old(n);
  for (int i = 0; i < n; ++i) to_old[i] = m.target.index_of(names[i]);
  ClusterMap r{m.source, Seed(names), {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.target.eps[i][j] = m.target.eps[to_old[i]][to_old[j]];
  r.images.reserve(n);
  for (int i = 0; i < n; ++i) r.images.push_back(m.images[to_old[i]]);
  return r;
}

// X-coordinate mutation in direction k, as a map from the mutated seed
// back into the original variables:
//   X'_k = X_k^{-1},
//   X'_i = X_i (1 + X_k)^{-eps_ik}        if eps_ik <= 0,
//   X'_i = X_i (1 + X_k^{-1})^{-eps_ik}   if eps_ik > 0.
inline ClusterMap mutate_x(const Seed& s, int k) {
  int n = s.size();
  if (k < 0 || k >= n) throw std::invalid_argument("mutate_x: bad direction");
  ClusterMap m{s, mutate_epsilon(s, k), {}};
  m.images.reserve(n);
  RatFunc xk = RatFunc::variable(n, k);
  RatFunc one = RatFunc::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      m.images.push_back(xk.pow(-1));
      continue;
    }
    int e = s.eps[i][k];
    RatFunc xi = RatFunc::variable(n, i);
    if (e <= 0) {
      m.images.push_back(xi * (one + xk).pow(-e));
    } else {
      m.images.push_back(xi * (one + xk.pow(-1)).pow(-e));
    }
  }
  return m;
}

inline ClusterMap mutate_x(const Seed& s, const std::string& vertex) {
  return mutate_x(s, s.index_of(vertex));
}

// Applies a sequence of mutations, composing the coordinate maps; the
// result expresses the final seed's coordinates in the starting variables.
inline ClusterMap mutate_sequence(const Seed& s, const std::vector<int>& directions) {
  ClusterMap acc = ClusterMap::identity(s);
  for (int k : directions) acc = compose(acc, mutate_x(acc.target, k));
  return acc;
}

// {f, g} = sum_ij c eps_ij X_i X_j (df/dX_i)(dg/dX_j); the constant c is a
// convention choice (the surface bracket uses c = 2, the abstract one 1).
inline RatFunc poisson_bracket(const Seed& s, const RatFunc& f, const RatFunc& g, int c = 2) {
  int n = s.size();
  if (f.arity != n || g.arity != n)
    throw std::invalid_argument("poisson_bracket: arity mismatch with seed");
  std::vector<RatFunc> df(n, RatFunc(n)), dg(n, RatFunc(n));
  std::vector<bool> have_df(n, false), have_dg(n, false);
  RatFunc acc(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (s.eps[i][j] == 0) continue;
      if (!have_df[i]) {
        df[i] = f.partial(i);
        have_df[i] = true;
      }
      if (!have_dg[j]) {
        dg[j] = g.partial(j);
        have_dg[j] = true;
      }
      if (df[i].is_zero() || dg[j].is_zero()) continue;
      RatFunc term = df[i] * dg[j];
      term *= RatFunc::variable(n, i);
      term *= RatFunc::variable(n, j);
      acc += term * RatFunc::constant(n, Rat(c * s.eps[i][j]));
    }
  return acc;
}

// A map preserves the bracket when pulling back the target bracket of two
// coordinates equals the source bracket of their images:
//   {X'_i, X'_j}_target = c eps'_ij X'_i X'_j  |->  c eps'_ij img_i img_j.
inline bool check_poisson_preserved(const ClusterMap& m, int c = 2) {
  int n_src = m.source.size();
  for (int i = 0; i < m.target.size(); ++i)
    for (int j = i + 1; j < m.target.size(); ++j) {
      int e = m.target.eps[i][j];
      RatFunc lhs = m.images[i] * m.images[j] * RatFunc::constant(n_src, Rat(c * e));
      RatFunc rhs = poisson_bracket(m.source, m.images[i], m.images[j], c);
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace xcv
