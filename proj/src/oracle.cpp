#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "outerplanar.hpp"

namespace opk {

namespace {

// Enumerates simple cur-t paths whose interior avoids `blocked`; interiors
// are accumulated in `interior` and also inserted into `blocked` while
// exploring. The callback returns true to accept and stop.
bool paths_dfs(const graph& g, int cur, int t, std::set<int>& blocked,
               std::vector<int>& interior, int min_interior,
               const std::function<bool()>& accept) {
  for (int y : g.neighbors(cur)) {
    if (y == t) {
      if (static_cast<int>(interior.size()) >= min_interior && accept()) return true;
      continue;
    }
    if (blocked.count(y)) continue;
    blocked.insert(y);
    interior.push_back(y);
    if (paths_dfs(g, y, t, blocked, interior, min_interior, accept)) return true;
    interior.pop_back();
    blocked.erase(y);
  }
  return false;
}

bool assign_paths(const graph& g, const std::vector<std::pair<int, int>>& pairs, size_t idx,
                  std::set<int>& blocked, std::vector<std::vector<int>>& interiors,
                  int min_interior) {
  if (idx == pairs.size()) return true;
  auto [s, t] = pairs[idx];
  std::vector<int> interior;
  return paths_dfs(g, s, t, blocked, interior, min_interior, [&]() {
    interiors.push_back(interior);
    if (assign_paths(g, pairs, idx + 1, blocked, interiors, min_interior)) return true;
    interiors.pop_back();
    return false;
  });
}

std::optional<std::vector<std::vector<int>>> find_k4_model(const graph& g) {
  std::vector<int> cand;
  for (int v : g.vertices())
    if (g.degree(v) >= 3) cand.push_back(v);
  int n = static_cast<int>(cand.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          int a = cand[i], b = cand[j], c = cand[k], d = cand[l];
          std::vector<std::pair<int, int>> pairs = {{a, b}, {a, c}, {a, d},
                                                    {b, c}, {b, d}, {c, d}};
          std::set<int> blocked = {a, b, c, d};
          std::vector<std::vector<int>> interiors;
          if (assign_paths(g, pairs, 0, blocked, interiors, 0)) {
            std::vector<std::set<int>> sets = {{a}, {b}, {c}, {d}};
            std::map<int, int> owner = {{a, 0}, {b, 1}, {c, 2}, {d, 3}};
            for (size_t p = 0; p < pairs.size(); ++p)
              sets[owner[pairs[p].first]].insert(interiors[p].begin(), interiors[p].end());
            std::vector<std::vector<int>> out;
            for (auto& s : sets) out.emplace_back(s.begin(), s.end());
            return out;
          }
        }
  return std::nullopt;
}

std::optional<std::vector<std::vector<int>>> find_k23_model(const graph& g) {
  std::vector<int> cand;
  for (int v : g.vertices())
    if (g.degree(v) >= 3) cand.push_back(v);
  for (size_t i = 0; i < cand.size(); ++i)
    for (size_t j = i + 1; j < cand.size(); ++j) {
      int a = cand[i], b = cand[j];
      std::vector<std::pair<int, int>> pairs = {{a, b}, {a, b}, {a, b}};
      std::set<int> blocked = {a, b};
      std::vector<std::vector<int>> interiors;
      if (assign_paths(g, pairs, 0, blocked, interiors, 1)) {
        std::vector<std::vector<int>> out = {{a}, {b}};
        for (auto& in : interiors) {
          std::sort(in.begin(), in.end());
          out.push_back(in);
        }
        return out;
      }
    }
  return std::nullopt;
}

std::vector<int> bfs_path_within(const graph& g, const std::set<int>& allowed, int s, int t) {
  std::map<int, int> pred;
  std::deque<int> q{s};
  pred[s] = s;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == t) break;
    for (int y : g.neighbors(x)) {
      if (!allowed.count(y) || pred.count(y)) continue;
      pred[y] = x;
      q.push_back(y);
    }
  }
  if (!pred.count(t)) throw std::logic_error("bfs_path_within: no path");
  std::vector<int> path{t};
  for (int z = t; z != s; z = pred[z]) path.push_back(pred[z]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Small vertex set that every outerplanar deletion set must intersect,
// obtained by shrinking the branch sets of a found obstruction.
std::vector<int> branch_candidates(const graph& g, const obstruction& obs) {
  std::set<int> u;
  const auto& sets = obs.branch_sets;
  if (obs.kind == obstruction::minor_kind::k23 && sets[0].size() == 1 && sets[1].size() == 1) {
    int a = sets[0][0], b = sets[1][0];
    u.insert(a);
    u.insert(b);
    for (int j = 2; j < 5; ++j) {
      std::set<int> allowed(sets[j].begin(), sets[j].end());
      allowed.insert(a);
      allowed.insert(b);
      auto path = bfs_path_within(g, allowed, a, b);
      u.insert(path.begin() + 1, path.end() - 1);
    }
  } else if (obs.kind == obstruction::minor_kind::k4) {
    std::vector<std::set<int>> ss;
    for (auto& s : sets) ss.emplace_back(s.begin(), s.end());
    std::vector<std::set<int>> terminals(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        bool found = false;
        for (int x : ss[i]) {
          for (int y : g.neighbors(x))
            if (ss[j].count(y)) {
              terminals[i].insert(x);
              terminals[j].insert(y);
              found = true;
              break;
            }
          if (found) break;
        }
        if (!found) throw std::logic_error("invalid K4 model");
      }
    for (int i = 0; i < 4; ++i) {
      int root = *terminals[i].begin();
      u.insert(root);
      for (int t : terminals[i]) {
        auto path = bfs_path_within(g, ss[i], root, t);
        u.insert(path.begin(), path.end());
      }
    }
  } else {
    for (const auto& s : sets) u.insert(s.begin(), s.end());
  }
  return {u.begin(), u.end()};
}

bool opd_solve(const graph& g, int budget, int avoid, std::vector<int>* chosen) {
  auto obs = find_obstruction(g);
  if (!obs) return true;
  if (budget == 0) return false;
  for (int v : branch_candidates(g, *obs)) {
    if (v == avoid) continue;
    graph h = g;
    h.remove_vertex(v);
    if (opd_solve(h, budget - 1, avoid, chosen)) {
      if (chosen) chosen->push_back(v);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> find_minor_model(const graph& g, forbidden_minor h) {
  return h == forbidden_minor::k4 ? find_k4_model(g) : find_k23_model(g);
}

bool has_minor(const graph& g, forbidden_minor h) { return find_minor_model(g, h).has_value(); }

std::optional<int> opd_exact(const graph& g, int cap) {
  if (cap < 0) throw std::invalid_argument("opd_exact: negative cap");
  for (int s = 0; s <= cap; ++s)
    if (opd_solve(g, s, -1, nullptr)) return s;
  return std::nullopt;
}

std::optional<std::vector<int>> opd_exact_set(const graph& g, int cap) {
  if (cap < 0) throw std::invalid_argument("opd_exact_set: negative cap");
  for (int s = 0; s <= cap; ++s) {
    std::vector<int> chosen;
    if (opd_solve(g, s, -1, &chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

std::optional<int> opd_exact_avoiding(const graph& g, int v, int cap) {
  if (!g.has_vertex(v)) throw std::invalid_argument("opd_exact_avoiding: vertex not present");
  if (cap < 0) throw std::invalid_argument("opd_exact_avoiding: negative cap");
  for (int s = 0; s <= cap; ++s)
    if (opd_solve(g, s, v, nullptr)) return s;
  return std::nullopt;
}

}  // namespace opk
