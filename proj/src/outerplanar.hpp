#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"

namespace opk {

// Embedding of one biconnected component with at least three vertices:
// the unique Hamiltonian cycle, the chords drawn inside it, and the weak
// dual tree over the interior faces.
struct block_embedding {
  std::vector<int> cycle;                      // cyclic vertex order
  std::vector<std::pair<int, int>> chords;     // interior edges, sorted
  std::vector<std::vector<int>> faces;         // per face: cyclic vertex list
  std::vector<std::pair<int, int>> dual_edges; // weak dual tree edges (face ids)
  // interior edge -> the two faces it separates; mirrors dual_edges
  std::map<std::pair<int, int>, std::pair<int, int>> chord_faces;
};

struct outerplanar_embedding {
  std::vector<block_embedding> blocks;  // blocks with >= 3 vertices, by min label
};

// Witness of non-outerplanarity: a K4 or K2,3 minor model. For K2,3 the
// first two branch sets are the degree-3 side.
struct obstruction {
  enum class minor_kind { k4, k23 };
  minor_kind kind = minor_kind::k4;
  std::vector<std::vector<int>> branch_sets;
};

using recognition_result = std::variant<outerplanar_embedding, obstruction>;

// Degree-2 elimination per biconnected component. Total and deterministic.
recognition_result recognize(const graph& g);

bool is_outerplanar(const graph& g);

// Obstruction if the graph is not outerplanar, nullopt otherwise. Cheaper
// than recognize when no embedding is needed.
std::optional<obstruction> find_obstruction(const graph& g);

// Maximum number of internally vertex-disjoint induced u-v paths in g minus
// the edge uv, capped at limit. Counted as the number of components of
// g - {u,v} adjacent to both endpoints.
int count_induced_uv_paths(const graph& g, int u, int v, int limit);

// Both conditions of the edge-removal characterization: every component of
// g - V(e) is outerplanar together with its neighborhood, and fewer than
// three induced internally disjoint endpoint paths exist in g minus e.
bool check_edge_removal_criterion(const graph& g, int u, int v);

// True iff every component of g - V(cycle) has at most two neighbors on the
// cycle and they are consecutive along it.
bool cycle_attachment_check(const graph& g, const std::vector<int>& cycle);

// Validators; return an error description, or nullopt when valid.
std::optional<std::string> validate_embedding(const graph& g, const outerplanar_embedding& emb);
std::optional<std::string> validate_obstruction(const graph& g, const obstruction& obs);

}  // namespace opk
