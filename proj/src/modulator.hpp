#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "config.hpp"
#include "graph.hpp"

namespace opk {

// Modulator X0 with per-vertex repair sets R(v) in X1 letting any single
// modulator vertex be put back while keeping the rest outerplanar.
struct augmented_modulator {
  std::set<int> x0;
  std::set<int> x1;
  std::map<int, std::set<int>> repair;  // v in x0 -> R(v) subset of x1
  int c = 1;

  std::set<int> all() const;
  void drop_vertex(int v);  // removes v from x0/x1 and all repair sets
};

// Pair classification over x0 union x1.
enum class pair_type { a, b, c };
pair_type classify_pair(const augmented_modulator& am, int u, int v);

struct op_decomposition {
  augmented_modulator am;
  std::set<int> z;
  int k = 0;
  long long d = 0;  // component/size factor for condition 4

  std::set<int> modulator() const { return am.all(); }
  std::set<int> separator_union() const;  // x0 + x1 + z
};

// Bipartite view of modulator vertices against the components of g - X.
struct component_graph {
  std::vector<int> side_x;                          // sorted
  std::vector<std::vector<int>> components;         // by min label
  std::vector<std::pair<int, int>> edges;           // (index into side_x, comp index)
  long long vertex_count() const;
  long long edge_count() const { return static_cast<long long>(edges.size()); }
};

component_graph build_component_graph(const graph& g, const std::set<int>& x);

struct provider_result {
  enum class outcome { found, opd_exceeds_k, unknown };
  outcome status = outcome::found;
  std::vector<int> modulator;
};

// Outerplanar deletion set provider. Exact mode finds an optimum via the
// oracle (valid verdicts up to c*k); heuristic mode deletes greedily from
// obstruction branch sets and downgrades the overflow verdict to unknown.
provider_result modulator_provider(const graph& g, int k, const kernel_config& cfg);

// Repair set for v: S avoiding v with |S| <= 3k and g - S outerplanar, or
// nullopt when no solution of size <= k avoids v. Requires g - v outerplanar.
std::optional<std::vector<int>> avoidance_set(const graph& g, int v, int k);

struct augment_output {
  enum class status { ok, opd_exceeds_k, unknown };
  status st = status::ok;
  graph g;
  int k = 0;
  augmented_modulator am;
  minor_trace trace;
};

augment_output build_augmented(const graph& g, int k, const kernel_config& cfg);

// Marks up to k+3 shared components per modulator pair, removes the edges of
// unmarked vertex-component pairs, then drops isolated components and
// modulator vertices. Updates am when modulator vertices disappear.
std::pair<graph, minor_trace> rule1_reduce_degree(const graph& g, int k,
                                                  augmented_modulator& am);

// Removes a vertex set with at most one neighbor whose closed neighborhood
// is outerplanar.
std::pair<graph, minor_trace> rule2_remove_pendant(const graph& g, const std::vector<int>& c);

// Separator Y disjoint from x with |Y| <= 4|x| making all pairs of x
// (x union Y)-separated. Requires g outerplanar.
std::vector<int> outerplanar_separator(const graph& g, const std::vector<int>& x);

// The set Z of the outerplanar decomposition: minimum separators for type
// A/B pairs, an outerplanar separator for type C pairs.
std::set<int> compute_z(const graph& g, int k, const augmented_modulator& am);

struct decomposition_output {
  enum class status { ok, opd_exceeds_k, unknown };
  status st = status::ok;
  graph g;
  int k = 0;
  op_decomposition od;
  minor_trace trace;
};

decomposition_output build_op_decomposition(const graph& g, int k, const kernel_config& cfg);

std::optional<std::string> validate_augmented_modulator(const graph& g, int k,
                                                        const augmented_modulator& am);
std::optional<std::string> validate_op_decomposition(const graph& g,
                                                     const op_decomposition& od);

}  // namespace opk
