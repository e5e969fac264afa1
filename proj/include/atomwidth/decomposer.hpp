#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "atomwidth/cwd.hpp"
#include "atomwidth/graph.hpp"
#include "atomwidth/transforms.hpp"

namespace atomwidth::decomposer {

using core::Graph;
using core::VertexSet;

// Which pipeline reduced the input: around an induced five-cycle, around an
// induced four-cycle, or the degenerate case with neither (the graph is then
// split, and a split atom is a complete graph).
enum class Route { kC5, kC4, kSplit };

// Stable names used in transcripts: "C5", "C4", "Split".
std::string route_name(Route route);

// The vertices outside a short induced cycle, grouped by which cycle
// positions they are adjacent to.
struct NeighborhoodPartition {
  // The induced C4 or C5, in cyclic order.
  std::vector<int> cycle;
  // Every subset of {1, ..., k} (k = cycle length) appears as a key, as a
  // sorted list of 1-based cycle positions. classes.at(S) holds exactly the
  // vertices x outside the cycle whose cycle neighborhood is
  // {cycle[i - 1] : i in S}; the sets partition V(g) minus the cycle.
  std::map<std::vector<int>, VertexSet> classes;
};

// Groups every vertex outside the cycle by its cycle neighborhood. Throws
// std::invalid_argument unless cycle lists 4 or 5 distinct vertices that
// induce a chordless cycle in the given cyclic order, and std::out_of_range
// on ids outside g.
NeighborhoodPartition neighborhood_partition(const Graph& g,
                                             const std::vector<int>& cycle);

// Class lookup with positions wrapped into 1..k, so class_at(p, {i, i + 2})
// works for any integer i. Throws std::invalid_argument if the wrapped
// positions collide.
const VertexSet& class_at(const NeighborhoodPartition& p,
                          std::vector<int> positions);

// Outcome of checking one structural claim at one rotation of the cycle.
struct ClaimReport {
  Route route = Route::kC5;
  int claim_id = 0;        // 1-based position in the route's claim list
  int symmetry_index = 0;  // the rotation i, or 0 for claims checked once
  bool holds = true;
  std::vector<int> witness;  // offending vertices when holds is false
};

// Checks the fixed list of structural claims the reduction steps rely on:
// six claims around a C5, nine around a C4, each instantiated at every
// rotation of the cycle. Every report holds when g is an atom with no
// induced 2P2 and no induced co(P2 + P3); violations come back as data with
// a concrete witness tuple, never as an error.
std::vector<ClaimReport> verify_claims(const Graph& g,
                                       const NeighborhoodPartition& p);

// One piece of the fully reduced graph, an easy graph of known small width.
struct Residual {
  Graph graph;         // induced on `vertices`, ids compacted in sorted order
  VertexSet vertices;  // where the piece sits inside the reduced graph
  cwd::CwdExpression expr;  // evaluates to a graph isomorphic to `graph`
};

// The full record of a reduction: the steps applied in order, the residual
// pieces left at the end, and per-kind step totals.
struct ReductionTranscript {
  Route route = Route::kSplit;
  std::vector<transforms::TransformStep> steps;
  std::vector<Residual> residuals;
  // Keyed by transforms::step_kind_name; all three kinds always present.
  std::map<std::string, int> counts;
};

// Folds transforms::apply_step over the recorded steps. Step payloads are in
// the ids of the graph they are applied to (deletions renumber survivors).
Graph replay(const Graph& input,
             const std::vector<transforms::TransformStep>& steps);

// The residual graphs reassembled at their recorded vertex ids. For every
// transcript this module emits, this equals replay(input, t.steps) exactly
// (same ids, same edges). Throws std::invalid_argument unless the recorded
// vertex sets partition 0..n-1.
Graph residual_union(const ReductionTranscript& t);

// The width guarantee the transcript certifies: the widest residual
// expression together with how many operations of each kind were spent.
cwd::SymbolicBound transcript_bound(const ReductionTranscript& t);

// The input contains a forbidden induced subgraph and is outside the class
// the reduction is proved for.
class NotInClassError : public std::runtime_error {
 public:
  NotInClassError(std::string forbidden, std::vector<int> embedding);
  // Catalog name of the found subgraph: "2P2" or "coP2+P3".
  const std::string& forbidden() const { return forbidden_; }
  // embedding()[u] = image in the input of vertex u of the named graph.
  const std::vector<int>& embedding() const { return embedding_; }

 private:
  std::string forbidden_;
  std::vector<int> embedding_;
};

// The input is not an atom: empty cutset means it is disconnected (or
// empty), otherwise the cutset is a clique whose removal disconnects it.
class NotAtomError : public std::runtime_error {
 public:
  explicit NotAtomError(VertexSet clique_cutset);
  const VertexSet& cutset() const { return cutset_; }

 private:
  VertexSet cutset_;
};

// A structural claim failed. Raised before any step is applied; on an input
// that satisfies the documented preconditions this signals an internal bug,
// on an unvalidated input it signals that the input is outside the class.
class ClaimViolationError : public std::runtime_error {
 public:
  explicit ClaimViolationError(ClaimReport report);
  const ClaimReport& report() const { return report_; }

 private:
  ClaimReport report_;
};

// Lexicographically least induced chordless cycle on `length` >= 3 vertices,
// canonical form: starts at the cycle's least vertex, second entry smaller
// than the last. nullopt when none exists.
std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int length);

// Reduction around an induced C5. Verifies the six claims (throwing
// ClaimViolationError on the first failure), then empties the two kinds of
// classes seeing three or four consecutive-ish positions (at most five
// deletions), splits off and clears the class complete to everything (one
// bipartite complementation, one subgraph complementation), removes the
// stray edge between overlapping two-position classes (at most five
// deletions), and clears the five remaining complete-bipartite bands (five
// bipartite complementations). The result is edgeless; the transcript holds
// one edgeless residual and at most 10 / 6 / 1 operations per kind.
ReductionTranscript decompose_c5(const Graph& g, const std::vector<int>& cycle);

// Reduction around an induced C4, for inputs with no induced C5. Verifies
// the nine claims, rotates the cycle indexing so the third and fourth
// one-position classes are empty, deletes the at most two side-pair
// vertices, the four cycle vertices, and the at most one vertex per diagonal
// class with neighbors in the matching one-position class (at most eight
// deletions total), then splits off the class seeing all four positions with
// one bipartite complementation. Residuals: that class (multipartite, width
// <= 2 expression) and the rest (bipartite chain, width <= 3 expression).
ReductionTranscript decompose_c4(const Graph& g, const std::vector<int>& cycle);

// Validates, then routes: rejects inputs with an induced 2P2 or co(P2 + P3)
// (NotInClassError) and non-atoms (NotAtomError); reduces around the least
// induced C5 if one exists, else the least induced C4; with neither, the
// graph is split and therefore complete, and is returned whole as a single
// residual with a width <= 2 expression and no steps.
ReductionTranscript decompose(const Graph& g);

// Serialized transcript: {"route", "steps": [{"kind", "payload"}],
// "residuals": [{"vertices", "edgelist", "expr", "width"}], "counts"}.
// Step payloads: {"vertex"} for deletions, {"set"} for subgraph
// complementations, {"set_s", "set_t"} for bipartite complementations.
std::string transcript_to_json(const ReductionTranscript& t,
                               bool pretty = false);

}  // namespace atomwidth::decomposer
