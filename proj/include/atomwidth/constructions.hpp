#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atomwidth/graph.hpp"

namespace atomwidth::constructions {

using core::Graph;
using core::VertexSet;

// ---------------------------------------------------------------------------
// Base lattices
// ---------------------------------------------------------------------------

// Rectangular grid on rows x cols vertices; vertex (r, c) has id r*cols + c
// and is adjacent to its horizontal and vertical neighbours.
Graph grid_graph(int rows, int cols);

// Brick-wall graph of the given height (h >= 2). Start from the candidate
// grid of positions (x, y) with 0 <= x <= 2h+1 and 0 <= y <= h; each row
// carries a horizontal path, and a vertical rung joins (x, y) to (x, y+1)
// exactly when x + y is odd. The two positions that would be left with
// degree one are dropped: (0, 0) always, plus (0, h) when h is odd and
// (2h+1, h) when h is even. Ids run in (y, x)-lexicographic order over the
// surviving positions. wall(2) has 16 vertices and 19 edges. Every wall is
// a bipartite atom with maximum degree 3.
Graph wall(int height);

// Position (x, y) of each wall vertex, indexed by vertex id.
std::vector<std::pair<int, int>> wall_coordinates(int height);

// ---------------------------------------------------------------------------
// Family generators. Each function documents its construction; the paired
// claims (forbidden induced subgraphs, atom status) live in the registry
// below and are verified generator-by-generator in the test suite.
// ---------------------------------------------------------------------------

// Line graph of wall(height); height >= 2.
Graph line_graph_wall(int height);

// From the 1-subdivided n x n grid (n >= 2), inside every cell join the left
// subdivision vertex to the top one and the bottom one to the right one;
// complement the result and attach a dominating non-adjacent vertex pair.
Graph apexed_co_bell(int n);

// Brick wall of height 2n+1 (n >= 2) in the mirrored orientation (rungs at
// even x + y, the two rightmost corner positions trimmed), 4-coloured so
// that the top row reads 1,2,3,4,... and each row below shifts by two; each
// colour class is completed to a clique.
Graph colored_wall(int n);
Graph colored_wall_co(int n);

// The four colour classes of colored_wall(n), indexed by colour.
std::array<VertexSet, 4> colored_wall_classes(int n);

// 1-subdivide wall(n) (n >= 2), make the two sides of the wall's
// bipartition complete to each other, and add one vertex adjacent to every
// subdivision vertex.
Graph diamond_p2p4_apex(int n);
Graph diamond_p2p4_apex_co(int n);

// Bipartite complementation across the bipartition of the 1-subdivided
// wall(n), n >= 2: original vertices on one side, subdivision vertices on
// the other.
Graph bipcomp_subdivided_wall(int n);
Graph bipcomp_subdivided_wall_co(int n);

// Two-layer threshold graph on vertices v_{i,j} (0 <= i <= n, 1 <= j <= n)
// and w_{i,j} (1 <= i <= n, 0 <= j <= n), n >= 3: v_{i,j} ~ w_{k,0} iff
// k >= i, w_{i,j} ~ v_{0,k} iff k >= j (indices >= 1), v_{i,j} ~ w_{i,j},
// and v_{0,j} ~ w_{i,0} for all i, j >= 1. Ids: v_{i,j} -> i*n + (j-1),
// then w_{i,j} -> (n+1)*n + (i-1)*(n+1) + j.
Graph lozin_volz_base(int n);

// lozin_volz_base(n) with v_{n,n} and w_{n,n} deleted.
Graph lozin_volz(int n);

// Complement of lozin_volz_base(n) with a dominating non-adjacent pair.
Graph apexed_co_lozin(int n);

// 7-subdivision of wall(n) built as a 3-subdivision of the 1-subdivided
// wall (n >= 2). With P the original wall vertices, Q the first-round
// subdivision vertices, and A/B/C the second-round vertices adjacent to P,
// to neither, and to Q respectively, complete each of P u C, Q u A, and B
// to a clique.
Graph wall7_cliques(int n);

// Twin-doubled complement of wall7_cliques(n).
Graph wall7_cliques_co(int n);

// n x n grid (n >= 3) with each diagonal class {(r, c) : r + c = k mod 3}
// completed to a clique. The atom claim applies from n >= 7.
Graph grid3color(int n);
Graph grid3color_co(int n);

// Split-like layer graph on vertices v_{i,j} (0 <= i, j <= n, (i,j) != (0,0),
// id i*(n+1) + j - 1), n >= 3: v_{i,j} ~ v_{k,0} iff k >= i and
// v_{i,j} ~ v_{0,k} iff k >= j (indices >= 1), plus all edges v_{i,0} ~
// v_{0,j} for i, j >= 1.
Graph cochordal_base(int n);

// Twin-doubled cochordal_base(n), n >= 3.
Graph cochordal_K4free(int n);

// From the complement of cochordal_base(n+1) (n >= 2) delete every v_{1,i}
// and v_{i,1} with i >= 1, then join v_{0,n+1} to v_{n+1,0}.
Graph chordal_J(int n);

// Gadget over the t x t grid (t >= 2) with vertex classes A_i (size = grid
// degree of v_i) and B_e (size 2, one class per grid edge): both sides are
// complete multipartite, and a perfect matching joins each B_e = {b, b'} of
// edge e = v_u v_w to the next unused slot of A_u and of A_w, edges taken in
// lexicographic order. A-side ids come first (classes in vertex order),
// then B-side ids (classes in edge order).
Graph q_of_grid(int t);

// Twin-doubled / complemented q_of_grid(t).
Graph q_of_grid_doubled(int t);
Graph q_of_grid_co(int t);

// 1-subdivided wall(n) (n >= 2) with the original vertices completed to a
// clique and one added vertex adjacent to every subdivision vertex.
Graph subwall_coA_apex(int n);

// Threshold layers over v_{i,j} (0 <= i, j <= n, (i,j) != (0,0), id
// i*(n+1) + j - 1) plus v_{0,n+1} (last id), n >= 2. Interior vertices
// v_{i,j} (i, j >= 1) see v_{k,0} iff k >= i, v_{0,k} iff k >= j, and
// always v_{0,n+1}; then the row arm {v_{i,0}} and the column arm
// {v_{0,j}} u {v_{0,n+1}} are bipartite-complemented against each other and
// the row arm is completed to a clique.
Graph chain_over_split(int n);

// wall(k), k >= 2, with the even parity class of its bipartition completed
// to a clique and a dominating non-adjacent vertex pair attached.
Graph wall_coA_two_apex(int k);

// For forbidden graphs h1, h2 where either both lie outside the class of
// path/subdivided-claw forests or both complements do, returns the pair
// (W, complement(W)) with W the max(|V(h1)|, |V(h2)|)-subdivision of
// wall(2). W is an (h1, h2)-free atom in the first case; complement(W) is
// in the second. Throws std::invalid_argument when neither case applies.
std::pair<Graph, Graph> need_s_cos_pair(const Graph& h1, const Graph& h2);

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

// Machine-checkable claims for one generator. `claimed_free` holds catalog
// graph names (see catalog.hpp's named_graph grammar); `claimed_atom` is
// absent when no atom status is asserted for the raw graph. `structure`
// optionally names one global property: "bipartite", "co-bipartite",
// "chordal", or "co-chordal". `family` groups variants that realize the
// same forbidden-subgraph family; "wall" marks shared infrastructure.
struct ConstructionSpec {
  std::string id;
  std::string family;
  std::string param_name;
  int min_param = 2;
  std::array<int, 2> smallest_params{2, 3};
  std::vector<std::string> claimed_free;
  std::optional<bool> claimed_atom;
  std::string structure;
  std::string source;
  Graph (*build)(int) = nullptr;
};

// All registered generators, in declaration order.
const std::vector<ConstructionSpec>& registry();

// Registry entry by id, or nullptr.
const ConstructionSpec* find_construction(std::string_view id);

}  // namespace atomwidth::constructions
