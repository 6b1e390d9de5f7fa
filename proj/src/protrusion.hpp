#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"
#include "graph.hpp"
#include "modulator.hpp"

namespace opk {

struct protrusion_decomposition {
  std::set<int> l;
  std::vector<std::vector<int>> components;  // components of g - l
};

// The three reducible structures of a large biconnected outerplanar graph.
struct reducible_structure {
  enum class kind { small_cut_pair, ladder_matching, fan_path };
  kind k = kind::small_cut_pair;
  // small_cut_pair: {u,v} and a terminal-free component with > 2 vertices
  int u = 0, v = 0;
  // ladder_matching: e1..e7 with the middle five inside the component
  std::array<std::pair<int, int>, 7> matching{};
  // fan_path: x with five consecutive path neighbors v1..v5 on p
  int x = 0;
  std::array<int, 5> fan{};
  std::vector<int> path;
  // the component referred to by each variant
  std::vector<int> component;
};

// Induced path in g - x containing all of N(x); requires g outerplanar and
// g - x connected. Built by spanning-tree leaf pruning plus shortcutting.
std::vector<int> neighborhood_path(const graph& g, int x);

struct rule3_result {
  bool applied = false;  // false: |N(x) cap C| <= 20
  graph g;
  minor_trace trace;
};

// Tries to remove an irrelevant edge from x into component comp of
// g - (x0 + x1 + z); verdict otherwise.
rule3_result rule3_irrelevant_edge(const graph& g, int k, const op_decomposition& od, int x,
                                   const std::vector<int>& comp);

struct build_l_result {
  bool rule_applied = false;  // re-decompose when true
  graph g;
  minor_trace trace;
  protrusion_decomposition pd;
};

build_l_result build_l(const graph& g, int k, const op_decomposition& od,
                       const kernel_config& cfg);

// Rules 4..7. Each validates its preconditions, applies one local change,
// and returns the new graph with the trace realizing it as a minor.
std::pair<graph, minor_trace> rule4_replace_component(const graph& g, const std::vector<int>& c);
std::pair<graph, minor_trace> rule5_contract_bump(const graph& g, std::pair<int, int> e,
                                                  const std::vector<int>& c);
std::pair<graph, minor_trace> rule6_fan(const graph& g, int x, const std::array<int, 5>& vs,
                                        const std::vector<int>& path);
std::pair<graph, minor_trace> rule7_ladder(const graph& g,
                                           const std::array<std::pair<int, int>, 7>& m,
                                           const std::vector<int>& c);

struct shrink_result {
  enum class kind { summary, rule2_target, rule4_target };
  kind k = kind::summary;
  std::vector<int> target;  // for the rule targets
  // summary: block-cut tree of g<A> with per-block boundary in g
  block_cut_tree_result bct;
  std::vector<std::vector<int>> block_boundaries;
};

// Either a block-cut summary with at most 25 blocks, each with boundary at
// most 4, or a vertex set to which rule 2 or rule 4 applies and shrinks the
// graph. Requires |N(A)| <= 4, g[A] connected, g<A> outerplanar.
shrink_result shrink_blockcut(const graph& g, const std::vector<int>& a);

// One of the three reducible structures of a biconnected outerplanar graph b
// with terminals t (nonempty, size <= 4); guaranteed when |V(b)| > 6288.
std::optional<reducible_structure> find_reducible_structure(const graph& b,
                                                            const std::vector<int>& t);

// Dispatches rules 2, 4..7 on a protrusion. Returns the shrunk graph, or
// nullopt when no rule fires (possible only at or below the threshold).
// strict mode enforces |A| > 25*6288 as a precondition.
std::optional<std::pair<graph, minor_trace>> reduce_protrusion(const graph& g,
                                                               const std::vector<int>& a,
                                                               bool strict);

// The two transversal paths of an order-respecting matching in a biconnected
// graph; each meets every matching edge in order of increasing index.
std::pair<std::vector<int>, std::vector<int>> ladder_transversal_paths(
    const graph& h, const std::array<std::pair<int, int>, 7>& m);

bool is_order_respecting_matching(const graph& h, const std::vector<std::pair<int, int>>& m);

std::optional<std::string> validate_reducible_structure(const graph& b,
                                                        const std::vector<int>& t,
                                                        const reducible_structure& rs);
std::optional<std::string> validate_protrusion_decomposition(const graph& g, int k,
                                                             const protrusion_decomposition& pd,
                                                             const kernel_config& cfg);

}  // namespace opk
