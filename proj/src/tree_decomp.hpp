#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"

namespace opk {

struct rooted_tree {
  int root = -1;
  std::vector<int> parent;                 // parent[root] = -1
  std::vector<std::vector<int>> children;  // sorted
  std::vector<int> depth;

  int node_count() const { return static_cast<int>(parent.size()); }
  static rooted_tree from_parents(int root, const std::vector<int>& parent);
  int lca(int a, int b) const;
};

struct tree_decomposition {
  rooted_tree tree;
  std::vector<std::vector<int>> bags;  // sorted, size <= 3 for width 2
};

// Width-2 tree decomposition of an outerplanar graph, built from the
// block-cut tree and the fan-triangulated faces of the weak dual. Rooted at
// the node containing the smallest vertex label. Throws with the obstruction
// message on non-outerplanar input.
tree_decomposition decompose_outerplanar(const graph& g);

// {LCA(u,v) : u,v in s}; size at most 2|s|-1 and idempotent.
std::set<int> lca_closure(const rooted_tree& t, const std::set<int>& s);

// Union of the bags of b; requires b closed under LCA.
std::vector<int> mark_bags(const tree_decomposition& td, const std::set<int>& b);

// Superset z' of z with |z'| <= 6|z| such that every component of g - z'
// has at most four neighbors in z'. Requires g outerplanar.
std::vector<int> expand_separator(const graph& g, const std::vector<int>& z);

// For a vertex of g, the node closest to the root among those whose bag
// contains it.
int topmost_bag_node(const tree_decomposition& td, int v);

std::optional<std::string> validate_tree_decomposition(const graph& g,
                                                       const tree_decomposition& td,
                                                       int max_width = 2);

}  // namespace opk
