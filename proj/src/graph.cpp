#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace opk {

std::pair<int, int> norm_edge(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

graph graph::from_edges(const std::vector<std::pair<int, int>>& edges) {
  graph g;
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void graph::add_vertex(int v) {
  if (v < 0) throw std::invalid_argument("vertex labels must be non-negative");
  adj_.try_emplace(v);
}

void graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  add_vertex(u);
  add_vertex(v);
  if (adj_[u].insert(v).second) {
    adj_[v].insert(u);
    ++m_;
  }
}

void graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: edge not present");
  adj_[u].erase(v);
  adj_[v].erase(u);
  --m_;
}

void graph::remove_vertex(int v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("remove_vertex: vertex not present");
  m_ -= static_cast<long long>(it->second.size());
  for (int u : it->second) adj_[u].erase(v);
  adj_.erase(it);
}

bool graph::has_edge(int u, int v) const {
  auto it = adj_.find(u);
  return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<int>& graph::neighbors(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("neighbors: vertex not present");
  return it->second;
}

std::vector<int> graph::vertices() const {
  std::vector<int> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (const auto& [v, nbrs] : adj_)
    for (int u : nbrs)
      if (v < u) out.emplace_back(v, u);
  return out;
}

int graph::min_vertex() const {
  if (adj_.empty()) throw std::invalid_argument("min_vertex: empty graph");
  return adj_.begin()->first;
}

int graph::max_vertex() const {
  if (adj_.empty()) throw std::invalid_argument("max_vertex: empty graph");
  return adj_.rbegin()->first;
}

graph graph::induced(const std::set<int>& keep) const {
  graph g;
  for (int v : keep) {
    if (!has_vertex(v)) throw std::invalid_argument("induced: vertex not present");
    g.add_vertex(v);
  }
  for (int v : keep)
    for (int u : neighbors(v))
      if (u > v && keep.count(u)) g.add_edge(v, u);
  return g;
}

graph graph::without_vertices(const std::set<int>& drop) const {
  std::set<int> keep;
  for (const auto& [v, _] : adj_)
    if (!drop.count(v)) keep.insert(v);
  return induced(keep);
}

graph graph::without_edge(int u, int v) const {
  graph g = *this;
  g.remove_edge(u, v);
  return g;
}

std::set<int> graph::neighborhood(const std::set<int>& s) const {
  std::set<int> out;
  for (int v : s)
    for (int u : neighbors(v))
      if (!s.count(u)) out.insert(u);
  return out;
}

graph graph::closed_neighborhood_subgraph(const std::set<int>& s) const {
  std::set<int> closed = s;
  for (int v : neighborhood(s)) closed.insert(v);
  return induced(closed);
}

trace_step trace_step::del_vertex(int u) {
  return {op::delete_vertex, u, 0, 0};
}

trace_step trace_step::del_edge(int u, int v) {
  auto [a, b] = norm_edge(u, v);
  return {op::delete_edge, a, b, 0};
}

trace_step trace_step::contract(int u, int v) {
  auto [a, b] = norm_edge(u, v);
  return {op::contract_edge, a, b, a};
}

void minor_trace::append(const minor_trace& t) {
  steps.insert(steps.end(), t.steps.begin(), t.steps.end());
}

std::string to_string(const trace_step& s) {
  switch (s.kind) {
    case trace_step::op::delete_vertex:
      return "dv " + std::to_string(s.u);
    case trace_step::op::delete_edge:
      return "de " + std::to_string(s.u) + " " + std::to_string(s.v);
    case trace_step::op::contract_edge:
      return "ce " + std::to_string(s.u) + " " + std::to_string(s.v) + " -> " +
             std::to_string(s.survivor);
  }
  return "";
}

std::pair<graph, trace_step> contract_edge(const graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("contract_edge: edge not present");
  int s = std::min(u, v);
  int o = std::max(u, v);
  graph out = g;
  std::vector<int> gained;
  for (int w : out.neighbors(o))
    if (w != s) gained.push_back(w);
  out.remove_vertex(o);
  for (int w : gained) out.add_edge(s, w);
  return {out, trace_step::contract(u, v)};
}

std::vector<std::vector<int>> connected_components(const graph& g) {
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int start : g.vertices()) {
    if (seen.count(start)) continue;
    std::vector<int> comp;
    std::deque<int> q{start};
    seen.insert(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (seen.insert(u).second) q.push_back(u);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // starts ascend, so components are ordered by min label
}

bool is_connected(const graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

block_cut_tree_result block_cut_tree(const graph& g) {
  if (g.empty()) throw std::invalid_argument("block_cut_tree: empty graph");
  if (!is_connected(g)) throw std::invalid_argument("block_cut_tree: graph is disconnected");

  block_cut_tree_result out;
  if (g.vertex_count() == 1) {
    out.blocks.push_back({g.min_vertex()});
    out.block_arts.emplace_back();
    return out;
  }

  // Iterative Tarjan. disc/low on labels; edge stack pops one block at a time.
  std::map<int, int> disc, low;
  std::map<int, int> parent;
  std::set<int> artic;
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  struct frame {
    int v;
    std::set<int>::const_iterator it, end;
  };

  int root = g.min_vertex();
  std::vector<frame> stack;
  disc[root] = low[root] = timer++;
  parent[root] = -1;
  stack.push_back({root, g.neighbors(root).begin(), g.neighbors(root).end()});
  int root_children = 0;

  auto pop_block = [&](int u, int v) {
    // Everything pushed after the tree edge (u,v) belongs to this block.
    std::set<int> verts;
    while (!estack.empty()) {
      auto [a, b] = estack.back();
      estack.pop_back();
      verts.insert(a);
      verts.insert(b);
      if (a == u && b == v) break;
    }
    out.blocks.emplace_back(verts.begin(), verts.end());
  };

  while (!stack.empty()) {
    frame& f = stack.back();
    if (f.it != f.end) {
      int w = *f.it++;
      if (!disc.count(w)) {
        parent[w] = f.v;
        if (f.v == root) ++root_children;
        disc[w] = low[w] = timer++;
        estack.emplace_back(f.v, w);
        stack.push_back({w, g.neighbors(w).begin(), g.neighbors(w).end()});
      } else if (w != parent[f.v] && disc[w] < disc[f.v]) {
        estack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
    } else {
      int w = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      int v = stack.back().v;
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= disc[v]) {
        if (v != root || root_children > 1) artic.insert(v);
        pop_block(v, w);
      }
    }
  }
  if (root_children > 1) artic.insert(root);

  std::sort(out.blocks.begin(), out.blocks.end());
  out.articulation_points.assign(artic.begin(), artic.end());
  for (const auto& blk : out.blocks) {
    std::vector<int> arts;
    for (int v : blk)
      if (artic.count(v)) arts.push_back(v);
    out.block_arts.push_back(std::move(arts));
  }
  return out;
}

bool is_biconnected(const graph& g) {
  if (!is_connected(g)) return false;
  return block_cut_tree(g).articulation_points.empty();
}

namespace {

// Unit-capacity flow network with split vertices, sized for repeated BFS
// augmentation capped by the caller.
struct split_network {
  std::vector<int> head, nxt, to, cap;
  std::vector<int> first;

  explicit split_network(int nodes) : first(nodes, -1) {}

  void arc(int a, int b, int c) {
    to.push_back(b);
    cap.push_back(c);
    nxt.push_back(first[a]);
    first[a] = static_cast<int>(to.size()) - 1;
    to.push_back(a);
    cap.push_back(0);
    nxt.push_back(first[b]);
    first[b] = static_cast<int>(to.size()) - 1;
  }
};

}  // namespace

disjoint_paths_result max_disjoint_paths(const graph& g, int u, int v, int cap) {
  if (u == v) throw std::invalid_argument("max_disjoint_paths: endpoints must differ");
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::invalid_argument("max_disjoint_paths: endpoint not present");

  std::map<int, int> idx;
  std::vector<int> labels = g.vertices();
  for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
  int n = static_cast<int>(labels.size());
  auto in_node = [&](int w) { return 2 * idx.at(w); };
  auto out_node = [&](int w) { return 2 * idx.at(w) + 1; };

  split_network net(2 * n);
  for (int w : labels) net.arc(in_node(w), out_node(w), (w == u || w == v) ? cap : 1);
  for (auto [a, b] : g.edges()) {
    // Edge arcs are effectively unbounded so that a minimum cut consists of
    // vertex arcs only; the direct u-v edge carries one path by itself.
    int c = (norm_edge(a, b) == norm_edge(u, v)) ? 1 : cap + 1;
    net.arc(out_node(a), in_node(b), c);
    net.arc(out_node(b), in_node(a), c);
  }

  int source = out_node(u);
  int sink = in_node(v);
  int flow = 0;
  std::vector<int> pre(2 * n);
  while (flow < cap) {
    std::fill(pre.begin(), pre.end(), -1);
    std::deque<int> q{source};
    pre[source] = -2;
    while (!q.empty() && pre[sink] == -1) {
      int x = q.front();
      q.pop_front();
      for (int e = net.first[x]; e != -1; e = net.nxt[e]) {
        if (net.cap[e] > 0 && pre[net.to[e]] == -1) {
          pre[net.to[e]] = e;
          q.push_back(net.to[e]);
        }
      }
    }
    if (pre[sink] == -1) break;
    for (int x = sink; x != source;) {
      int e = pre[x];
      net.cap[e] -= 1;
      net.cap[e ^ 1] += 1;
      x = net.to[e ^ 1];
    }
    ++flow;
  }

  disjoint_paths_result res;
  res.count = flow;
  if (flow < cap && !g.has_edge(u, v)) {
    // Min cut: vertices whose in-node is reachable in the residual but whose
    // out-node is not.
    std::vector<char> reach(2 * n, 0);
    std::deque<int> q{source};
    reach[source] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int e = net.first[x]; e != -1; e = net.nxt[e])
        if (net.cap[e] > 0 && !reach[net.to[e]]) {
          reach[net.to[e]] = 1;
          q.push_back(net.to[e]);
        }
    }
    std::vector<int> sep;
    for (int w : labels)
      if (w != u && w != v && reach[in_node(w)] && !reach[out_node(w)]) sep.push_back(w);
    res.separator = std::move(sep);
  }
  return res;
}

graph replay_trace(const graph& g, const minor_trace& t) {
  graph cur = g;
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const trace_step& s = t.steps[i];
    try {
      switch (s.kind) {
        case trace_step::op::delete_vertex:
          cur.remove_vertex(s.u);
          break;
        case trace_step::op::delete_edge:
          cur.remove_edge(s.u, s.v);
          break;
        case trace_step::op::contract_edge: {
          auto [next, step] = contract_edge(cur, s.u, s.v);
          if (step.survivor != s.survivor)
            throw std::invalid_argument("survivor mismatch");
          cur = std::move(next);
          break;
        }
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("replay_trace: illegal step " + std::to_string(i) + " (" +
                                  to_string(s) + "): " + e.what());
    }
  }
  return cur;
}

void delete_vertex_set(graph& g, const std::vector<int>& c, minor_trace& trace) {
  std::vector<int> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    g.remove_vertex(v);
    trace.push(trace_step::del_vertex(v));
  }
}

int contract_vertex_set(graph& g, const std::set<int>& s, minor_trace& trace) {
  if (s.empty()) throw std::invalid_argument("contract_vertex_set: empty set");
  // Repeatedly contract the lexicographically smallest internal edge of the
  // current set; the minimum label survives throughout.
  std::set<int> live = s;
  while (live.size() > 1) {
    bool found = false;
    for (int a : live) {
      for (int b : g.neighbors(a)) {
        if (b > a && live.count(b)) {
          auto [next, step] = contract_edge(g, a, b);
          g = std::move(next);
          trace.push(step);
          live.erase(std::max(a, b));
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw std::invalid_argument("contract_vertex_set: set is not connected");
  }
  return *live.begin();
}

}  // namespace opk
