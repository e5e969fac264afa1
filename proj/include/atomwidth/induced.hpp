#pragma once

#include <optional>
#include <vector>

#include "atomwidth/graph.hpp"

namespace atomwidth::recognizers {

using core::Graph;

// Induced-subgraph containment. On success returns the embedding e with
// e[u] = image of h's vertex u in g, preserving adjacency and non-adjacency.
// H's vertices are matched in (degree descending, id ascending) order with
// candidates tried in ascending id, so the returned embedding is the
// lexicographically least image sequence under that order.
std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                 const Graph& h);

bool is_h_free(const Graph& g, const Graph& h);
bool is_h_free(const Graph& g, const std::vector<Graph>& hs);

}  // namespace atomwidth::recognizers
