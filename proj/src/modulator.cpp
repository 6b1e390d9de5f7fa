#include "modulator.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "bounds.hpp"
#include "oracle.hpp"
#include "outerplanar.hpp"
#include "tree_decomp.hpp"

namespace opk {

std::set<int> augmented_modulator::all() const {
  std::set<int> out = x0;
  out.insert(x1.begin(), x1.end());
  return out;
}

void augmented_modulator::drop_vertex(int v) {
  x0.erase(v);
  repair.erase(v);
  if (x1.erase(v)) {
    for (auto& [u, r] : repair) r.erase(v);
  }
  // keep x1 = union of repair sets exact
  std::set<int> used;
  for (const auto& [u, r] : repair) used.insert(r.begin(), r.end());
  x1 = std::move(used);
}

pair_type classify_pair(const augmented_modulator& am, int u, int v) {
  bool u0 = am.x0.count(u), v0 = am.x0.count(v);
  if (u0 && v0) return pair_type::a;
  if (u0 && am.repair.at(u).count(v)) return pair_type::a;
  if (v0 && am.repair.at(v).count(u)) return pair_type::a;
  if (u0 || v0) return pair_type::b;
  return pair_type::c;
}

std::set<int> op_decomposition::separator_union() const {
  std::set<int> out = am.all();
  out.insert(z.begin(), z.end());
  return out;
}

long long component_graph::vertex_count() const {
  return static_cast<long long>(side_x.size() + components.size());
}

component_graph build_component_graph(const graph& g, const std::set<int>& x) {
  component_graph cg;
  for (int v : x)
    if (g.has_vertex(v)) cg.side_x.push_back(v);
  graph rest = g.without_vertices(x);
  cg.components = connected_components(rest);
  for (size_t i = 0; i < cg.side_x.size(); ++i) {
    const auto& nbrs = g.neighbors(cg.side_x[i]);
    for (size_t j = 0; j < cg.components.size(); ++j) {
      bool touch = false;
      for (int v : cg.components[j])
        if (nbrs.count(v)) {
          touch = true;
          break;
        }
      if (touch) cg.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return cg;
}

provider_result modulator_provider(const graph& g, int k, const kernel_config& cfg) {
  provider_result res;
  if (cfg.provider == provider_mode::exact) {
    auto set = opd_exact_set(g, cfg.c * k);
    if (!set || static_cast<int>(set->size()) > k) {
      // exact search: exceeding k on either branch proves opd > k
      res.status = provider_result::outcome::opd_exceeds_k;
      return res;
    }
    res.modulator = *set;
    return res;
  }
  // heuristic: repeatedly delete the highest-degree vertex of an obstruction
  graph cur = g;
  std::vector<int> chosen;
  while (auto obs = find_obstruction(cur)) {
    int best = -1;
    for (const auto& s : obs->branch_sets)
      for (int v : s) {
        if (best == -1 || cur.degree(v) > cur.degree(best) ||
            (cur.degree(v) == cur.degree(best) && v < best))
          best = v;
      }
    cur.remove_vertex(best);
    chosen.push_back(best);
    if (static_cast<int>(chosen.size()) > cfg.c * k) {
      res.status = provider_result::outcome::unknown;
      return res;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  res.modulator = std::move(chosen);
  return res;
}

std::optional<std::vector<int>> avoidance_set(const graph& g, int v, int k) {
  if (!g.has_vertex(v)) throw std::invalid_argument("avoidance_set: vertex not present");
  graph rest = g;
  rest.remove_vertex(v);
  if (!is_outerplanar(rest))
    throw std::invalid_argument("avoidance_set: g - v is not outerplanar");

  tree_decomposition td = decompose_outerplanar(rest);
  int n = td.tree.node_count();
  // postorder over the rooted tree (children ascend)
  std::vector<int> post;
  post.reserve(n);
  if (n > 0) {
    std::vector<std::pair<int, size_t>> stack{{td.tree.root, 0}};
    while (!stack.empty()) {
      auto& [node, idx] = stack.back();
      if (idx < td.tree.children[node].size()) {
        int c = td.tree.children[node][idx++];
        stack.push_back({c, 0});
      } else {
        post.push_back(node);
        stack.pop_back();
      }
    }
  }

  std::set<int> removed;
  std::vector<int> marked_nodes;
  while (true) {
    // subtree vertex sets, bottom-up
    std::vector<std::set<int>> sub(n);
    for (int node : post) {
      auto& s = sub[node];
      s.insert(td.bags[node].begin(), td.bags[node].end());
      for (int c : td.tree.children[node]) s.insert(sub[c].begin(), sub[c].end());
    }
    int lowest = -1;
    for (int node : post) {
      std::set<int> verts;
      for (int x : sub[node])
        if (!removed.count(x)) verts.insert(x);
      verts.insert(v);
      if (!is_outerplanar(g.induced(verts))) {
        lowest = node;
        break;
      }
    }
    if (lowest == -1) break;
    marked_nodes.push_back(lowest);
    if (static_cast<int>(marked_nodes.size()) > k) return std::nullopt;
    for (int x : sub[lowest]) removed.insert(x);
  }

  std::set<int> s;
  for (int node : marked_nodes) s.insert(td.bags[node].begin(), td.bags[node].end());
  std::vector<int> out(s.begin(), s.end());
  graph check = g.without_vertices(s);
  if (!is_outerplanar(check)) throw std::logic_error("avoidance_set: marked bags do not work");
  return out;
}

augment_output build_augmented(const graph& g, int k, const kernel_config& cfg) {
  augment_output out;
  out.g = g;
  out.k = k;
  out.am.c = cfg.c;

  while (true) {
    provider_result pr = modulator_provider(out.g, out.k, cfg);
    if (pr.status == provider_result::outcome::opd_exceeds_k) {
      out.st = augment_output::status::opd_exceeds_k;
      return out;
    }
    if (pr.status == provider_result::outcome::unknown) {
      out.st = augment_output::status::unknown;
      return out;
    }
    std::set<int> x0(pr.modulator.begin(), pr.modulator.end());

    bool restarted = false;
    std::map<int, std::set<int>> repair;
    for (int v : x0) {
      std::set<int> others = x0;
      others.erase(v);
      graph gv = out.g.without_vertices(others);
      auto s = avoidance_set(gv, v, out.k);
      if (!s) {
        // every small solution contains v
        out.g.remove_vertex(v);
        out.trace.push(trace_step::del_vertex(v));
        out.k -= 1;
        restarted = true;
        break;
      }
      repair[v] = std::set<int>(s->begin(), s->end());
    }
    if (restarted) continue;

    out.am.x0 = std::move(x0);
    out.am.repair = std::move(repair);
    std::set<int> x1;
    for (const auto& [v, r] : out.am.repair) x1.insert(r.begin(), r.end());
    out.am.x1 = std::move(x1);
    return out;
  }
}

std::pair<graph, minor_trace> rule1_reduce_degree(const graph& g, int k,
                                                  augmented_modulator& am) {
  minor_trace trace;
  graph cur = g;
  std::set<int> x = am.all();
  component_graph cg = build_component_graph(cur, x);

  // adjacency: component index -> set of x indices
  std::vector<std::set<int>> comp_adj(cg.components.size());
  for (auto [xi, cj] : cg.edges) comp_adj[cj].insert(xi);

  std::set<std::pair<int, int>> marked;  // (x index, comp index)
  for (size_t i = 0; i < cg.side_x.size(); ++i) {
    for (size_t j = i + 1; j < cg.side_x.size(); ++j) {
      int taken = 0;
      for (size_t cj = 0; cj < cg.components.size() && taken < k + 3; ++cj) {
        if (comp_adj[cj].count(static_cast<int>(i)) &&
            comp_adj[cj].count(static_cast<int>(j))) {
          marked.insert({static_cast<int>(i), static_cast<int>(cj)});
          marked.insert({static_cast<int>(j), static_cast<int>(cj)});
          ++taken;
        }
      }
    }
  }

  for (auto [xi, cj] : cg.edges) {
    if (marked.count({xi, cj})) continue;
    int xv = cg.side_x[xi];
    for (int v : cg.components[cj])
      if (cur.has_edge(xv, v)) {
        cur.remove_edge(xv, v);
        trace.push(trace_step::del_edge(xv, v));
      }
  }

  // isolated components and modulator vertices disappear
  for (const auto& comp : cg.components) {
    bool isolated = true;
    for (int v : comp) {
      for (int u : cur.neighbors(v))
        if (x.count(u)) isolated = false;
      if (!isolated) break;
    }
    if (isolated) delete_vertex_set(cur, comp, trace);
  }
  for (int v : std::vector<int>(x.begin(), x.end())) {
    if (cur.has_vertex(v) && cur.degree(v) == 0) {
      cur.remove_vertex(v);
      trace.push(trace_step::del_vertex(v));
      am.drop_vertex(v);
    }
  }
  return {cur, trace};
}

std::pair<graph, minor_trace> rule2_remove_pendant(const graph& g, const std::vector<int>& c) {
  if (c.empty()) throw std::invalid_argument("rule2: empty set");
  std::set<int> cs(c.begin(), c.end());
  for (int v : cs)
    if (!g.has_vertex(v)) throw std::invalid_argument("rule2: vertex not present");
  if (g.neighborhood(cs).size() > 1)
    throw std::invalid_argument("rule2: set has more than one neighbor");
  if (!is_outerplanar(g.closed_neighborhood_subgraph(cs)))
    throw std::invalid_argument("rule2: closed neighborhood is not outerplanar");
  graph cur = g;
  minor_trace trace;
  delete_vertex_set(cur, c, trace);
  return {cur, trace};
}

namespace {

// Minimum (v, targets)-separator avoiding `protect`: protected vertices get
// unbounded capacity, so the cut consists of unprotected split vertices.
std::vector<int> min_separator_avoiding(const graph& g, int v, const std::set<int>& targets,
                                        const std::set<int>& protect, int cap) {
  std::map<int, int> idx;
  auto labels = g.vertices();
  for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
  int n = static_cast<int>(labels.size());
  int nodes = 2 * n + 1;
  int sink = 2 * n;
  int big = cap + 1;

  std::vector<int> first(nodes, -1);
  std::vector<int> nxt, head, arc_cap;
  auto arc = [&](int a, int b, int c) {
    head.push_back(b);
    arc_cap.push_back(c);
    nxt.push_back(first[a]);
    first[a] = static_cast<int>(head.size()) - 1;
    head.push_back(a);
    arc_cap.push_back(0);
    nxt.push_back(first[b]);
    first[b] = static_cast<int>(head.size()) - 1;
  };
  auto in_node = [&](int w) { return 2 * idx.at(w); };
  auto out_node = [&](int w) { return 2 * idx.at(w) + 1; };

  for (int w : labels) {
    int c = (w == v || protect.count(w)) ? big : 1;
    arc(in_node(w), out_node(w), c);
    if (targets.count(w)) arc(out_node(w), sink, big);
  }
  for (auto [a, b] : g.edges()) {
    arc(out_node(a), in_node(b), big);
    arc(out_node(b), in_node(a), big);
  }

  int source = out_node(v);
  int flow = 0;
  std::vector<int> pre(nodes);
  while (flow < big) {
    std::fill(pre.begin(), pre.end(), -1);
    std::deque<int> q{source};
    pre[source] = -2;
    while (!q.empty() && pre[sink] == -1) {
      int x = q.front();
      q.pop_front();
      for (int e = first[x]; e != -1; e = nxt[e])
        if (arc_cap[e] > 0 && pre[head[e]] == -1) {
          pre[head[e]] = e;
          q.push_back(head[e]);
        }
    }
    if (pre[sink] == -1) break;
    for (int x = sink; x != source;) {
      int e = pre[x];
      arc_cap[e] -= 1;
      arc_cap[e ^ 1] += 1;
      x = head[e ^ 1];
    }
    ++flow;
  }
  if (flow >= big)
    throw std::logic_error("min_separator_avoiding: separator exceeds the expected bound");

  std::vector<char> reach(nodes, 0);
  std::deque<int> q{source};
  reach[source] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int e = first[x]; e != -1; e = nxt[e])
      if (arc_cap[e] > 0 && !reach[head[e]]) {
        reach[head[e]] = 1;
        q.push_back(head[e]);
      }
  }
  std::vector<int> sep;
  for (int w : labels)
    if (w != v && !protect.count(w) && reach[in_node(w)] && !reach[out_node(w)])
      sep.push_back(w);
  return sep;
}

}  // namespace

std::vector<int> outerplanar_separator(const graph& g, const std::vector<int>& x) {
  for (int v : x)
    if (!g.has_vertex(v)) throw std::invalid_argument("outerplanar_separator: vertex missing");
  if (!is_outerplanar(g))
    throw std::invalid_argument("outerplanar_separator: graph is not outerplanar");

  std::set<int> xs(x.begin(), x.end());
  graph h = g;
  for (int a : xs)
    for (int b : xs)
      if (a < b && h.has_edge(a, b)) h.remove_edge(a, b);

  tree_decomposition td = decompose_outerplanar(h);
  std::set<int> work = xs;
  std::set<int> y;
  while (work.size() >= 2) {
    // vertex whose topmost bag is deepest
    int pick = -1, pick_depth = -1;
    for (int v : work) {
      int d = td.tree.depth[topmost_bag_node(td, v)];
      if (d > pick_depth) {
        pick = v;
        pick_depth = d;
      }
    }
    const auto& bag = td.bags[topmost_bag_node(td, pick)];
    std::set<int> in_x, out_x;
    for (int w : bag) {
      if (w == pick) continue;
      if (work.count(w))
        in_x.insert(w);
      else
        out_x.insert(w);
    }
    std::set<int> s = out_x;
    if (!in_x.empty()) {
      auto sep = min_separator_avoiding(h, pick, in_x, xs, 5);
      s.insert(sep.begin(), sep.end());
    }
    for (int w : s)
      if (!xs.count(w)) y.insert(w);
    work.erase(pick);
  }
  return {y.begin(), y.end()};
}

std::set<int> compute_z(const graph& g, int k, const augmented_modulator& am) {
  std::set<int> z;
  std::set<int> x = am.all();
  std::vector<int> xv(x.begin(), x.end());
  for (size_t i = 0; i < xv.size(); ++i) {
    for (size_t j = i + 1; j < xv.size(); ++j) {
      int u = xv[i], v = xv[j];
      pair_type t = classify_pair(am, u, v);
      if (t == pair_type::c) continue;
      std::set<int> others = x;
      others.erase(u);
      others.erase(v);
      graph h = g.without_vertices(others);
      if (h.has_edge(u, v)) h.remove_edge(u, v);
      auto r = max_disjoint_paths(h, u, v, k + 4);
      if (r.count <= k + 3) {
        if (!r.separator) throw std::logic_error("compute_z: missing separator");
        z.insert(r.separator->begin(), r.separator->end());
      }
    }
  }
  if (!am.x1.empty() && !am.x0.empty()) {
    graph rest = g.without_vertices(am.x0);
    std::vector<int> x1(am.x1.begin(), am.x1.end());
    auto y = outerplanar_separator(rest, x1);
    z.insert(y.begin(), y.end());
  }
  return z;
}

decomposition_output build_op_decomposition(const graph& g, int k, const kernel_config& cfg) {
  decomposition_output out;
  augment_output aug = build_augmented(g, k, cfg);
  out.trace = std::move(aug.trace);
  out.g = std::move(aug.g);
  out.k = aug.k;
  if (aug.st != augment_output::status::ok) {
    out.st = aug.st == augment_output::status::opd_exceeds_k
                 ? decomposition_output::status::opd_exceeds_k
                 : decomposition_output::status::unknown;
    return out;
  }

  augmented_modulator am = std::move(aug.am);
  {
    auto [g1, t1] = rule1_reduce_degree(out.g, out.k, am);
    out.g = std::move(g1);
    out.trace.append(t1);
  }
  {
    component_graph cg = build_component_graph(out.g, am.all());
    long long bound = f1(cfg.c) * (out.k + 3LL) * (out.k + 3LL) * (out.k + 3LL);
    if (cg.vertex_count() > bound || cg.edge_count() > bound)
      throw std::logic_error("component graph exceeds the f1 bound after rule 1");
  }

  std::set<int> z0 = compute_z(out.g, out.k, am);
  std::set<int> x = am.all();
  std::set<int> z;
  if (!z0.empty()) {
    graph rest = out.g.without_vertices(x);
    auto zexp = expand_separator(rest, std::vector<int>(z0.begin(), z0.end()));
    z = std::set<int>(zexp.begin(), zexp.end());
  }

  // drop leftover components with at most one neighbor
  {
    std::set<int> xz = x;
    xz.insert(z.begin(), z.end());
    graph rest = out.g.without_vertices(xz);
    for (const auto& comp : connected_components(rest)) {
      std::set<int> cs(comp.begin(), comp.end());
      if (out.g.neighborhood(cs).size() <= 1) {
        auto [g2, t2] = rule2_remove_pendant(out.g, comp);
        out.g = std::move(g2);
        out.trace.append(t2);
      }
    }
  }

  out.od.am = std::move(am);
  out.od.z = std::move(z);
  out.od.k = out.k;
  out.od.d = f3(cfg.c);
  if (auto err = validate_op_decomposition(out.g, out.od))
    throw std::logic_error("outerplanar decomposition invalid: " + *err);
  return out;
}

std::optional<std::string> validate_augmented_modulator(const graph& g, int k,
                                                        const augmented_modulator& am) {
  for (int v : am.x0)
    if (am.x1.count(v)) return "x0 and x1 intersect";
  for (int v : am.x0)
    if (!g.has_vertex(v)) return "x0 vertex not in graph";
  for (int v : am.x1)
    if (!g.has_vertex(v)) return "x1 vertex not in graph";
  if (static_cast<long long>(am.x0.size()) > static_cast<long long>(am.c) * k)
    return "x0 larger than c*k";
  if (!is_outerplanar(g.without_vertices(am.x0))) return "g - x0 is not outerplanar";
  std::set<int> x1;
  for (int v : am.x0) {
    auto it = am.repair.find(v);
    if (it == am.repair.end()) return "missing repair set";
    if (static_cast<long long>(it->second.size()) > 3LL * k) return "repair set larger than 3k";
    for (int u : it->second)
      if (!am.x1.count(u)) return "repair set leaves x1";
    std::set<int> drop = am.x0;
    drop.erase(v);
    drop.insert(it->second.begin(), it->second.end());
    if (!is_outerplanar(g.without_vertices(drop))) return "repair set does not restore v";
    x1.insert(it->second.begin(), it->second.end());
  }
  if (x1 != am.x1) return "x1 is not the union of repair sets";
  std::set<int> all = am.all();
  for (int v : all) {
    std::set<int> drop = all;
    drop.erase(v);
    if (!is_outerplanar(g.without_vertices(drop)))
      return "putting back a single vertex breaks outerplanarity";
  }
  return std::nullopt;
}

std::optional<std::string> validate_op_decomposition(const graph& g,
                                                     const op_decomposition& od) {
  if (auto err = validate_augmented_modulator(g, od.k, od.am)) return err;
  std::set<int> x = od.am.all();
  for (int v : od.z) {
    if (!g.has_vertex(v)) return "z vertex not in graph";
    if (x.count(v)) return "z intersects the modulator";
  }
  std::set<int> xz = x;
  xz.insert(od.z.begin(), od.z.end());
  graph rest = g.without_vertices(xz);
  auto comps = connected_components(rest);

  // condition 2: pairs separated or joined by k+4 interior-nonempty paths
  std::vector<std::set<int>> comp_nbrs;
  comp_nbrs.reserve(comps.size());
  for (const auto& comp : comps)
    comp_nbrs.push_back(g.neighborhood(std::set<int>(comp.begin(), comp.end())));
  std::vector<int> xv(x.begin(), x.end());
  for (size_t i = 0; i < xv.size(); ++i)
    for (size_t j = i + 1; j < xv.size(); ++j) {
      int u = xv[i], v = xv[j];
      bool separated = true;
      for (const auto& nb : comp_nbrs)
        if (nb.count(u) && nb.count(v)) separated = false;
      if (separated) continue;
      graph h = g;
      if (h.has_edge(u, v)) h.remove_edge(u, v);
      if (max_disjoint_paths(h, u, v, od.k + 4).count < od.k + 4)
        return "pair neither separated nor joined by k+4 paths";
    }

  // condition 3: each component sees at most 4 vertices of z
  for (const auto& nb : comp_nbrs) {
    int in_z = 0;
    for (int v : nb)
      if (od.z.count(v)) ++in_z;
    if (in_z > 4) return "component with more than 4 neighbors in z";
  }

  // condition 4: size bounds
  long long bound = od.d * (od.k + 3LL) * (od.k + 3LL) * (od.k + 3LL);
  if (static_cast<long long>(od.z.size()) > bound) return "z exceeds its size bound";
  if (static_cast<long long>(comps.size()) > bound) return "too many components";
  return std::nullopt;
}

}  // namespace opk
