#pragma once

// Quiver-level view of a seed: isomorphism-invariant canonical forms,
// recognition of simply laced Dynkin shapes, and breadth-first search of
// a seed's mutation class. Canonicalization refines a vertex partition by
// iterated neighborhood signatures, then minimizes over the remaining
// orderings, so it is exact (not a hash) for the small ranks used here.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "seed.hpp"

namespace xcv {

namespace detail {

using EpsMat = std::vector<std::vector<int>>;

inline EpsMat permuted(const EpsMat& e, const std::vector<int>& perm) {
  int n = static_cast<int>(e.size());
  EpsMat r(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i][j] = e[perm[i]][perm[j]];
  return r;
}

// Iterated refinement: a vertex's signature is its color plus the multiset
// of (neighbor color, edge value) pairs. Returns stable colors.
inline std::vector<int> refine_colors(const EpsMat& e) {
  int n = static_cast<int>(e.size());
  std::vector<int> colors(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sigs(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::pair<int, int>> nb;
      for (int j = 0; j < n; ++j)
        if (j != i && e[i][j] != 0) nb.push_back({colors[j], e[i][j]});
      std::sort(nb.begin(), nb.end());
      std::vector<int> flat{colors[i]};
      for (auto& [c, v] : nb) {
        flat.push_back(c);
        flat.push_back(v);
      }
      sigs[i] = {flat, i};
    }
    std::vector<std::vector<int>> uniq;
    for (auto& [flat, i] : sigs) uniq.push_back(flat);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      auto it = std::lower_bound(uniq.begin(), uniq.end(), sigs[i].first);
      next[i] = static_cast<int>(it - uniq.begin());
    }
    if (next == colors) break;
    colors = next;
  }
  return colors;
}

}  // namespace detail

// Serialized minimal permutation of the exchange matrix, identical for
// isomorphic quivers.
inline std::string quiver_canonical_form(const Seed& s) {
  int n = s.size();
  std::vector<int> colors = detail::refine_colors(s.eps);

  // Group vertices by color; orderings enumerate products of in-cell
  // permutations, cells taken in increasing color order.
  std::vector<std::vector<int>> cells;
  {
    std::map<int, std::vector<int>> by_color;
    for (int i = 0; i < n; ++i) by_color[colors[i]].push_back(i);
    for (auto& [c, vs] : by_color) cells.push_back(vs);
  }

  std::vector<int> perm;
  detail::EpsMat best;
  bool have_best = false;
  long long tried = 0;
  const long long kMaxOrderings = 2'000'000;

  std::vector<std::vector<int>> cell_perms(cells.size());
  // Depth-first over cells; each cell's vertices are permuted in all ways.
  std::vector<int> stack_cell(cells.size(), 0);
  std::vector<std::vector<int>> arrangement(cells.size());
  for (size_t c = 0; c < cells.size(); ++c) arrangement[c] = cells[c];

  std::function<void(size_t)> rec = [&](size_t ci) {
    if (tried > kMaxOrderings) throw std::runtime_error("quiver_canonical_form: search too large");
    if (ci == cells.size()) {
      ++tried;
      std::vector<int> p;
      for (auto& a : arrangement) p.insert(p.end(), a.begin(), a.end());
      detail::EpsMat m = detail::permuted(s.eps, p);
      if (!have_best || m < best) {
        best = m;
        have_best = true;
      }
      return;
    }
    std::vector<int>& a = arrangement[ci];
    std::sort(a.begin(), a.end());
    do {
      rec(ci + 1);
    } while (std::next_permutation(a.begin(), a.end()));
  };
  rec(0);

  std::ostringstream out;
  out << n << ";";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (best[i][j] != 0) out << i << "," << j << ":" << best[i][j] << ";";
  return out.str();
}

// Name of the simply laced Dynkin diagram underlying this seed, if any.
// The underlying graph must be a connected tree with all |eps| = 1.
inline std::optional<std::string> dynkin_shape(const Seed& s) {
  int n = s.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int a = std::abs(s.eps[i][j]);
      if (a == 0) continue;
      if (a > 1) return std::nullopt;
      adj[i].push_back(j);
      adj[j].push_back(i);
      ++edges;
    }
  if (edges != n - 1) return std::nullopt;  // tree has n-1 edges
  // Connectivity.
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  if (count != n) return std::nullopt;

  int max_deg = 0, branch_vertex = -1, branch_count = 0;
  for (int i = 0; i < n; ++i) {
    int d = static_cast<int>(adj[i].size());
    max_deg = std::max(max_deg, d);
    if (d >= 3) {
      ++branch_count;
      branch_vertex = i;
    }
  }
  if (max_deg > 3 || branch_count > 1) return std::nullopt;
  if (branch_count == 0) return n >= 1 ? std::optional<std::string>("A" + std::to_string(n))
                                       : std::nullopt;

  // Single degree-3 vertex: measure the three branch lengths.
  std::vector<int> lens;
  for (int start : adj[branch_vertex]) {
    int len = 1, prev = branch_vertex, cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  if (lens[0] == 1 && lens[1] == 1) return "D" + std::to_string(lens[2] + 3);
  if (lens[0] == 1 && lens[1] == 2 && lens[2] == 2) return "E6";
  if (lens[0] == 1 && lens[1] == 2 && lens[2] == 3) return "E7";
  if (lens[0] == 1 && lens[1] == 2 && lens[2] == 4) return "E8";
  return std::nullopt;
}

struct MutationClassResult {
  bool finite = false;                     // exhausted below the cap
  long long class_size = 0;                // isomorphism classes seen
  std::optional<std::string> dynkin;       // first recognized shape
  std::vector<std::string> witness;        // mutation sequence reaching it
};

// Breadth-first search of the mutation class up to quiver isomorphism.
// Stops early when `stop_on_dynkin` and a Dynkin shape is found; aborts
// with an error if the class exceeds `max_classes`.
inline MutationClassResult mutation_class_search(const Seed& start, bool stop_on_dynkin = false,
                                                 long long max_classes = 1'000'000) {
  MutationClassResult res;
  std::set<std::string> seen;
  std::queue<std::pair<Seed, std::vector<int>>> frontier;
  seen.insert(quiver_canonical_form(start));
  frontier.push({start, {}});
  res.class_size = 1;

  auto check = [&](const Seed& s, const std::vector<int>& path) {
    if (res.dynkin) return;
    if (auto d = dynkin_shape(s)) {
      res.dynkin = d;
      res.witness.clear();
      for (int k : path) res.witness.push_back(start.names[k]);
    }
  };
  check(start, {});
  if (stop_on_dynkin && res.dynkin) {
    res.finite = true;  // not exhausted, but the caller only wanted the shape
    return res;
  }

  while (!frontier.empty()) {
    auto [s, path] = frontier.front();
    frontier.pop();
    for (int k = 0; k < s.size(); ++k) {
      Seed next = mutate_epsilon(s, k);
      std::string key = quiver_canonical_form(next);
      if (seen.count(key)) continue;
      if (static_cast<long long>(seen.size()) >= max_classes)
        throw std::runtime_error("mutation_class_search: class size exceeds cap");
      seen.insert(key);
      ++res.class_size;
      std::vector<int> next_path = path;
      next_path.push_back(k);
      check(next, next_path);
      if (stop_on_dynkin && res.dynkin) return res;
      frontier.push({next, std::move(next_path)});
    }
  }
  res.finite = true;
  return res;
}

}  // namespace xcv
