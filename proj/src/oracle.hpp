#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace opk {

enum class forbidden_minor { k4, k23 };

// Exhaustive minor-model search (branch vertices plus internally disjoint
// connecting paths, backtracking). Exponential by design; ground truth for
// desk-scale graphs, feasible to n of about 14.
std::optional<std::vector<std::vector<int>>> find_minor_model(const graph& g, forbidden_minor h);

bool has_minor(const graph& g, forbidden_minor h);

// Exact outerplanar deletion number, or nullopt when it exceeds cap.
// Enumeration by increasing size, branching on the vertices of a found
// obstruction.
std::optional<int> opd_exact(const graph& g, int cap);

// A minimum outerplanar deletion set of size opd(g), or nullopt beyond cap.
std::optional<std::vector<int>> opd_exact_set(const graph& g, int cap);

// Minimum solution size among sets excluding v, or nullopt beyond cap.
std::optional<int> opd_exact_avoiding(const graph& g, int v, int cap);

}  // namespace opk
