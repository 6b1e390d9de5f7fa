#include "tree_decomp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <variant>

#include "outerplanar.hpp"

namespace opk {

rooted_tree rooted_tree::from_parents(int root, const std::vector<int>& parent) {
  rooted_tree t;
  t.root = root;
  t.parent = parent;
  int n = static_cast<int>(parent.size());
  t.children.assign(n, {});
  for (int v = 0; v < n; ++v)
    if (v != root) {
      if (parent[v] < 0 || parent[v] >= n)
        throw std::invalid_argument("rooted_tree: bad parent");
      t.children[parent[v]].push_back(v);
    }
  t.depth.assign(n, -1);
  std::deque<int> q{root};
  t.depth[root] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int c : t.children[v]) {
      t.depth[c] = t.depth[v] + 1;
      q.push_back(c);
    }
  }
  for (int v = 0; v < n; ++v)
    if (t.depth[v] < 0) throw std::invalid_argument("rooted_tree: not connected");
  return t;
}

int rooted_tree::lca(int a, int b) const {
  while (depth[a] > depth[b]) a = parent[a];
  while (depth[b] > depth[a]) b = parent[b];
  while (a != b) {
    a = parent[a];
    b = parent[b];
  }
  return a;
}

std::set<int> lca_closure(const rooted_tree& t, const std::set<int>& s) {
  std::set<int> out = s;
  for (int a : s)
    for (int b : s) out.insert(t.lca(a, b));
  return out;
}

tree_decomposition decompose_outerplanar(const graph& g) {
  auto rec = recognize(g);
  if (std::holds_alternative<obstruction>(rec))
    throw std::invalid_argument("decompose_outerplanar: input is not outerplanar");
  const auto& emb = std::get<outerplanar_embedding>(rec);

  std::map<std::vector<int>, const block_embedding*> emb_by_block;
  for (const auto& be : emb.blocks) {
    std::vector<int> key = be.cycle;
    std::sort(key.begin(), key.end());
    emb_by_block[key] = &be;
  }

  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> links;
  auto add_bag = [&](std::vector<int> bag) {
    std::sort(bag.begin(), bag.end());
    bags.push_back(std::move(bag));
    return static_cast<int>(bags.size()) - 1;
  };

  // one singleton node per vertex acts as the hub joining its blocks
  std::map<int, int> vertex_node;
  for (int v : g.vertices()) vertex_node[v] = add_bag({v});

  for (const auto& comp : connected_components(g)) {
    graph sub = g.induced(std::set<int>(comp.begin(), comp.end()));
    auto bct = block_cut_tree(sub);
    for (const auto& blk : bct.blocks) {
      if (blk.size() < 2) continue;
      if (blk.size() == 2) {
        int node = add_bag({blk[0], blk[1]});
        links.emplace_back(node, vertex_node.at(blk[0]));
        links.emplace_back(node, vertex_node.at(blk[1]));
        continue;
      }
      const block_embedding& be = *emb_by_block.at(blk);
      // fan-triangulate each face into a chain of 3-vertex bags
      std::vector<int> chain_first(be.faces.size());
      std::vector<std::map<std::pair<int, int>, int>> face_edge_bag(be.faces.size());
      for (size_t fi = 0; fi < be.faces.size(); ++fi) {
        const auto& f = be.faces[fi];
        int c0 = f[0];
        int prev = -1;
        for (size_t i = 1; i + 1 < f.size(); ++i) {
          int node = add_bag({c0, f[i], f[i + 1]});
          if (prev != -1) links.emplace_back(prev, node);
          if (prev == -1) chain_first[fi] = node;
          prev = node;
          auto& eb = face_edge_bag[fi];
          if (i == 1) eb.emplace(norm_edge(c0, f[1]), node);
          eb.emplace(norm_edge(f[i], f[i + 1]), node);
          if (i + 2 == f.size()) eb.emplace(norm_edge(c0, f.back()), node);
        }
      }
      // adjacent faces are linked bag-to-bag at their shared edge, so a
      // shared vertex stays on a connected set of bags
      for (const auto& [edge, fpair] : be.chord_faces) {
        auto [f1, f2] = fpair;
        auto it1 = face_edge_bag[f1].find(edge);
        auto it2 = face_edge_bag[f2].find(edge);
        if (it1 == face_edge_bag[f1].end() || it2 == face_edge_bag[f2].end())
          throw std::logic_error("face fan misses its boundary edge");
        links.emplace_back(it1->second, it2->second);
      }
      // hub link: one bag of this block per vertex
      for (int v : blk) {
        int target = -1;
        for (size_t fi = 0; fi < be.faces.size() && target == -1; ++fi) {
          int node = chain_first[fi];
          const auto& f = be.faces[fi];
          for (size_t i = 1; i + 1 < f.size(); ++i, ++node)
            if (f[0] == v || f[i] == v || f[i + 1] == v) {
              target = node;
              break;
            }
        }
        if (target == -1) throw std::logic_error("block vertex missing from all fans");
        links.emplace_back(vertex_node.at(v), target);
      }
    }
  }

  int n = static_cast<int>(bags.size());
  if (n == 0) {
    tree_decomposition td;
    td.tree.root = -1;
    return td;
  }
  int root = vertex_node.at(g.min_vertex());

  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> parent(n, -2);
  auto start_tree = [&](int r, int par) {
    parent[r] = par;
    std::deque<int> q{r};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x])
        if (parent[y] == -2) {
          parent[y] = x;
          q.push_back(y);
        }
    }
  };
  start_tree(root, -1);
  for (int v = 0; v < n; ++v)
    if (parent[v] == -2) start_tree(v, root);  // other components hang off the root

  tree_decomposition td;
  td.bags = std::move(bags);
  td.tree = rooted_tree::from_parents(root, parent);
  return td;
}

std::vector<int> mark_bags(const tree_decomposition& td, const std::set<int>& b) {
  if (lca_closure(td.tree, b) != b)
    throw std::invalid_argument("mark_bags: node set is not LCA-closed");
  std::set<int> out;
  for (int node : b) out.insert(td.bags.at(node).begin(), td.bags.at(node).end());
  return {out.begin(), out.end()};
}

int topmost_bag_node(const tree_decomposition& td, int v) {
  int best = -1;
  for (int node = 0; node < td.tree.node_count(); ++node) {
    if (!std::binary_search(td.bags[node].begin(), td.bags[node].end(), v)) continue;
    if (best == -1 || td.tree.depth[node] < td.tree.depth[best]) best = node;
  }
  if (best == -1) throw std::invalid_argument("topmost_bag_node: vertex in no bag");
  return best;
}

std::vector<int> expand_separator(const graph& g, const std::vector<int>& z) {
  if (z.empty()) return {};
  tree_decomposition td = decompose_outerplanar(g);
  std::set<int> nodes;
  for (int v : z) nodes.insert(topmost_bag_node(td, v));
  std::set<int> closed = lca_closure(td.tree, nodes);
  auto out = mark_bags(td, closed);
  // z itself is covered: each vertex appears in its topmost bag
  return out;
}

std::optional<std::string> validate_tree_decomposition(const graph& g,
                                                       const tree_decomposition& td,
                                                       int max_width) {
  if (g.empty()) return std::nullopt;
  std::map<int, std::vector<int>> occ;
  for (int node = 0; node < td.tree.node_count(); ++node) {
    if (static_cast<int>(td.bags[node].size()) > max_width + 1) return "bag too large";
    for (int v : td.bags[node]) {
      if (!g.has_vertex(v)) return "bag contains unknown vertex";
      occ[v].push_back(node);
    }
  }
  for (int v : g.vertices())
    if (!occ.count(v)) return "vertex in no bag";
  // connectivity of occurrences: each non-topmost occurrence has its parent
  // in the occurrence set
  for (const auto& [v, nodes] : occ) {
    std::set<int> ns(nodes.begin(), nodes.end());
    int tops = 0;
    for (int node : ns) {
      int p = td.tree.parent[node];
      if (p == -1 || !ns.count(p)) ++tops;
    }
    if (tops != 1) return "occurrences of a vertex are not a connected subtree";
  }
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (int node : occ[u])
      if (std::binary_search(td.bags[node].begin(), td.bags[node].end(), v)) found = true;
    if (!found) return "edge not inside any bag";
  }
  return std::nullopt;
}

}  // namespace opk
