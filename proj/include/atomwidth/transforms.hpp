#pragma once

#include <string>
#include <vector>

#include "atomwidth/graph.hpp"

namespace atomwidth::transforms {

using core::Graph;
using core::VertexSet;

// One recorded operation of a decomposition transcript. Payloads refer to
// the ids of the graph the step is applied to; a deletion renumbers the
// survivors by sorted position, and later steps use the new ids.
enum class StepKind {
  kDeleteVertex,
  kSubgraphComplement,
  kBipartiteComplement,
};

struct TransformStep {
  StepKind kind = StepKind::kDeleteVertex;
  int vertex = -1;  // kDeleteVertex
  VertexSet set_s;  // kSubgraphComplement, kBipartiteComplement
  VertexSet set_t;  // kBipartiteComplement only

  bool operator==(const TransformStep&) const = default;
};

// Stable names used in transcripts and symbolic bound records:
// "vertex_deletion", "subgraph_complementation", "bipartite_complementation".
std::string step_kind_name(StepKind kind);

// Edges inside s flipped, everything else untouched. Involution.
Graph subgraph_complement(const Graph& g, const VertexSet& s);

// Edges with one endpoint in s and the other in t flipped. s and t must be
// disjoint. Involution.
Graph bipartite_complement(const Graph& g, const VertexSet& s,
                           const VertexSet& t);

// Induced subgraph on the complement of s (survivors renumbered by sorted
// position).
Graph delete_vertices(const Graph& g, const VertexSet& s);

Graph apply_step(const Graph& g, const TransformStep& step);

// Every edge replaced by a path through k new internal vertices; k = 0 is
// the identity. New vertices are numbered n + rank * k + position, where
// rank is the edge's index in lexicographic order and position runs from the
// lower endpoint.
Graph k_subdivide(const Graph& g, int k);

// One vertex per edge of g in lexicographic order; adjacent when the edges
// share an endpoint.
Graph line_graph(const Graph& g);

// Doubles every vertex: ids 0..n-1 keep g's edges and each v gains a false
// twin v + n adjacent to exactly the neighbors and twins of neighbors of v.
// Requires g connected with n >= 2; the result is then an atom.
Graph twin_double(const Graph& g);

// Appends two non-adjacent vertices n and n + 1, each complete to V(g).
// Requires g to have at least one non-edge; the result is then an atom.
Graph add_apex_pair(const Graph& g);

}  // namespace atomwidth::transforms
