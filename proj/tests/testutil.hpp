#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "graph.hpp"

namespace opk::testutil {

inline graph path_graph(int n, int first = 1) {
  graph g;
  g.add_vertex(first);
  for (int i = 1; i < n; ++i) g.add_edge(first + i - 1, first + i);
  return g;
}

inline graph cycle_graph(int n, int first = 1) {
  graph g = path_graph(n, first);
  if (n >= 3) g.add_edge(first + n - 1, first);
  return g;
}

inline graph complete_graph(int n, int first = 1) {
  graph g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(first + i, first + j);
  return g;
}

inline graph complete_bipartite(int p, int q, int first = 1) {
  graph g;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(first + i, first + p + j);
  return g;
}

// Path 1..n with an apex adjacent to every path vertex.
inline graph fan_graph(int n_path, int first = 1) {
  graph g = path_graph(n_path, first);
  int apex = first + n_path;
  for (int i = 0; i < n_path; ++i) g.add_edge(apex, first + i);
  return g;
}

// Hub first+n adjacent to every vertex of the rim cycle first..first+n-1.
inline graph wheel_graph(int n_rim, int first = 1) {
  graph g = cycle_graph(n_rim, first);
  int hub = first + n_rim;
  for (int i = 0; i < n_rim; ++i) g.add_edge(hub, first + i);
  return g;
}

// 2 x n grid; rows at first.. and first+n.., rungs between them.
inline graph ladder_graph(int n, int first = 1) {
  graph g;
  for (int i = 0; i < n - 1; ++i) {
    g.add_edge(first + i, first + i + 1);
    g.add_edge(first + n + i, first + n + i + 1);
  }
  for (int i = 0; i < n; ++i) g.add_edge(first + i, first + n + i);
  return g;
}

inline graph disjoint_union(const graph& a, const graph& b, int offset) {
  graph g = a;
  for (int v : b.vertices()) g.add_vertex(v + offset);
  for (auto [u, v] : b.edges()) g.add_edge(u + offset, v + offset);
  return g;
}

inline graph random_graph(int n, double p, std::mt19937_64& rng, int first = 1) {
  graph g;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i) g.add_vertex(first + i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) g.add_edge(first + i, first + j);
  return g;
}

// Random labelled tree on nodes 0..n-1 as parent array (parent[0] = -1).
inline std::vector<int> random_parents(int n, std::mt19937_64& rng) {
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> d(0, i - 1);
    parent[i] = d(rng);
  }
  return parent;
}

// ---- brute-force references ----

inline int brute_component_count(const graph& g) {
  return static_cast<int>(connected_components(g).size());
}

inline std::vector<int> brute_articulation_points(const graph& g) {
  std::vector<int> out;
  int base = brute_component_count(g);
  for (int v : g.vertices()) {
    graph h = g;
    h.remove_vertex(v);
    if (!h.empty() && brute_component_count(h) > base) out.push_back(v);
  }
  return out;
}

// All simple u-v paths as interior vertex sets (deduplicated).
inline void brute_uv_path_interiors(const graph& g, int u, int v,
                                    std::set<std::set<int>>& out) {
  std::vector<int> stack{u};
  std::set<int> used{u};
  auto rec = [&](auto&& self, int cur) -> void {
    for (int w : g.neighbors(cur)) {
      if (w == v) {
        std::set<int> interior(stack.begin() + 1, stack.end());
        out.insert(interior);
        continue;
      }
      if (used.count(w)) continue;
      used.insert(w);
      stack.push_back(w);
      self(self, w);
      stack.pop_back();
      used.erase(w);
    }
  };
  rec(rec, u);
}

// Maximum number of internally vertex-disjoint u-v paths (edge uv counts as
// a path with empty interior), by exhaustive packing.
inline int brute_max_disjoint_paths(const graph& g, int u, int v) {
  std::set<std::set<int>> interiors;
  brute_uv_path_interiors(g, u, v, interiors);
  std::vector<std::set<int>> all(interiors.begin(), interiors.end());
  int best = 0;
  auto rec = [&](auto&& self, size_t i, std::set<int> used, int cnt) -> void {
    best = std::max(best, cnt);
    for (size_t j = i; j < all.size(); ++j) {
      bool ok = true;
      for (int x : all[j])
        if (used.count(x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::set<int> next = used;
      next.insert(all[j].begin(), all[j].end());
      self(self, j + 1, std::move(next), cnt + 1);
    }
  };
  rec(rec, 0, {}, 0);
  return best;
}

}  // namespace opk::testutil
