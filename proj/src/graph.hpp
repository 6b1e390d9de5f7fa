#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace opk {

// Simple undirected graph over stable non-negative integer labels.
// Labels survive deletions and are never reused; a contraction keeps
// the smaller of the two labels so that runs are reproducible.
class graph {
public:
  graph() = default;

  static graph from_edges(const std::vector<std::pair<int, int>>& edges);

  void add_vertex(int v);
  void add_edge(int u, int v);  // inserts missing endpoints
  void remove_edge(int u, int v);
  void remove_vertex(int v);

  bool has_vertex(int v) const { return adj_.count(v) != 0; }
  bool has_edge(int u, int v) const;

  const std::set<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return m_; }
  bool empty() const { return adj_.empty(); }

  std::vector<int> vertices() const;              // ascending
  std::vector<std::pair<int, int>> edges() const; // (min,max), ascending
  int min_vertex() const;
  int max_vertex() const;

  graph induced(const std::set<int>& keep) const;
  graph without_vertices(const std::set<int>& drop) const;
  graph without_edge(int u, int v) const;

  // N(S): neighbors of the set outside the set.
  std::set<int> neighborhood(const std::set<int>& s) const;
  // G<S> = G[N[S]], the set together with its open neighborhood.
  graph closed_neighborhood_subgraph(const std::set<int>& s) const;

  bool operator==(const graph&) const = default;

private:
  std::map<int, std::set<int>> adj_;
  long long m_ = 0;
};

struct trace_step {
  enum class op { delete_vertex, delete_edge, contract_edge };
  op kind = op::delete_vertex;
  int u = 0;
  int v = 0;
  int survivor = 0;

  static trace_step del_vertex(int u);
  static trace_step del_edge(int u, int v);
  static trace_step contract(int u, int v);

  bool operator==(const trace_step&) const = default;
};

// Replayable witness that one graph is a minor of another.
struct minor_trace {
  std::vector<trace_step> steps;

  void push(const trace_step& s) { steps.push_back(s); }
  void append(const minor_trace& t);
  bool empty() const { return steps.empty(); }
};

struct block_cut_tree_result {
  std::vector<std::vector<int>> blocks;   // sorted vertex lists, sorted by min label
  std::vector<int> articulation_points;   // sorted
  std::vector<std::vector<int>> block_arts;  // per block: its articulation vertices
};

struct disjoint_paths_result {
  int count = 0;
  // Minimum (u,v)-separator; present when count < cap and uv is not an edge.
  std::optional<std::vector<int>> separator;
};

// g/uv with the smaller label surviving; second element is the trace step.
std::pair<graph, trace_step> contract_edge(const graph& g, int u, int v);

// Maximal connected vertex sets, each sorted, ordered by minimum label.
std::vector<std::vector<int>> connected_components(const graph& g);

// Blocks and articulation points of a connected graph.
block_cut_tree_result block_cut_tree(const graph& g);

// min(cap, number of internally vertex-disjoint u-v paths), counting the
// direct edge if present. Via vertex-capacitated flow, so at most cap
// augmentations are performed.
disjoint_paths_result max_disjoint_paths(const graph& g, int u, int v, int cap);

// Applies the steps in order; throws naming the step index on an illegal step.
graph replay_trace(const graph& g, const minor_trace& t);

bool is_connected(const graph& g);
bool is_biconnected(const graph& g);  // connected with no articulation point

// Deletes the vertices of c ascending, appending to the trace.
void delete_vertex_set(graph& g, const std::vector<int>& c, minor_trace& trace);

// Contracts a connected vertex set to a single vertex (the minimum label),
// appending the contractions to the trace. Returns the surviving label.
int contract_vertex_set(graph& g, const std::set<int>& s, minor_trace& trace);

std::pair<int, int> norm_edge(int u, int v);

std::string to_string(const trace_step& s);

}  // namespace opk
