#pragma once

#include <array>
#include <optional>
#include <vector>

#include "atomwidth/graph.hpp"

namespace atomwidth::recognizers {

using core::Graph;
using core::VertexSet;

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

// Degree-sequence split test (with the partition verified before returning).
std::optional<SplitPartition> is_split(const Graph& g);

// Two-coloring; sides sorted, side 0 holds vertex 0's side per component.
std::optional<std::array<VertexSet, 2>> is_bipartite(const Graph& g);

bool is_chordal(const Graph& g);

bool is_complete(const Graph& g);

// Complement is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g);

struct ChainOrdering {
  std::vector<int> side_a;  // ordered so neighborhoods are nested descending
  VertexSet side_b;
};

// Present iff g is bipartite with nested neighborhoods on one side,
// equivalently bipartite and 2P2-free.
std::optional<ChainOrdering> is_bipartite_chain(const Graph& g);

// Every component is a path or a subdivided claw.
bool in_class_S(const Graph& h);
bool in_class_coS(const Graph& h);

bool has_dominating_vertex(const Graph& h);
bool has_nonadjacent_pair_complete_to_rest(const Graph& h);

// Some clique whose deletion leaves >= 2 components, or absent. A
// disconnected graph yields the empty clique. Production algorithm scans a
// minimal elimination ordering; the brute-force variant tries every clique
// and exists as a test oracle.
std::optional<VertexSet> find_clique_cutset(const Graph& g);
std::optional<VertexSet> find_clique_cutset_brute(const Graph& g);

// Connected with no clique cut-set.
bool is_atom(const Graph& g);

}  // namespace atomwidth::recognizers
