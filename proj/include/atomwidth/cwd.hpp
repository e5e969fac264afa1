#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "atomwidth/graph.hpp"
#include "atomwidth/isomorphism.hpp"

namespace atomwidth::cwd {

using core::Graph;
using core::is_isomorphic;

// Expression over the four clique-width operations: create a single labelled
// vertex, take a disjoint union of two labelled graphs, add every edge
// between two label classes (distinct labels only), and move every vertex of
// one label class to another label. Labels are positive integers. Nodes are
// immutable and share subtrees, so copies are cheap.
class CwdExpression {
 public:
  enum class Kind { kVertex, kUnion, kJoin, kRelabel };

  // Factories. Labels must be >= 1; join requires two distinct labels;
  // relabel with from == to is accepted and evaluates as a no-op.
  static CwdExpression vertex(int label);
  static CwdExpression disjoint_union(CwdExpression left, CwdExpression right);
  static CwdExpression join(int label_a, int label_b, CwdExpression inner);
  static CwdExpression relabel(int from, int to, CwdExpression inner);

  Kind kind() const { return node_->kind; }
  // kVertex: the label. kJoin: the two joined labels. kRelabel: from, to.
  int label_a() const { return node_->a; }
  int label_b() const { return node_->b; }
  // kUnion: both children. kJoin / kRelabel: the single child via left().
  // Cheap: the returned value shares the subtree.
  CwdExpression left() const;
  CwdExpression right() const;

  // Number of vertex-creation leaves.
  int vertex_count() const { return node_->vertices; }

  // Count of distinct label values mentioned anywhere in the expression
  // (creations, joins, relabels). A graph built by an expression of width w
  // has clique-width at most w.
  int width() const;

  // Structural equality.
  bool operator==(const CwdExpression& other) const;
  bool operator!=(const CwdExpression& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    int a = 0;
    int b = 0;
    int vertices = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit CwdExpression(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

struct LabeledGraph {
  Graph graph;
  std::vector<int> labels;  // labels[v] = final label of vertex v
};

// Deterministic evaluation: vertices are numbered 0.. in the order their
// creation operations appear reading the expression left to right.
LabeledGraph eval(const CwdExpression& expr);

// S-expression text: (v 1), (union A B), (join 1 2 A), (relabel 2 1 A),
// single spaces, no trailing whitespace. parse(print(e)) == e and
// print(parse(s)) == s for well-formed s.
std::string print_expression(const CwdExpression& expr);
CwdExpression parse_expression(const std::string& text);

// Width-1 union of k isolated vertices; k >= 1.
CwdExpression build_edgeless(int k);

// Complete graph on k >= 1 vertices; width 1 for k = 1, else 2.
CwdExpression build_complete(int k);

// Any P4-free graph, width <= 2, via its cotree: a connected graph on two or
// more vertices is the pairwise join of the complement's components.
// eval() gives a graph isomorphic to g. Throws std::invalid_argument if g
// has an induced P4 or is empty.
CwdExpression build_cograph(const Graph& g);

// Any bipartite graph with nested neighborhoods, width <= 3. One side is
// processed by descending degree; label 2 accumulates the other side, label
// 3 carries the vertex being attached, label 1 holds finished vertices.
// Throws std::invalid_argument if g is not a bipartite chain graph or is
// empty.
CwdExpression build_bipartite_chain(const Graph& g);

// Smallest k <= budget such that a k-label expression evaluates to a graph
// isomorphic to g, or nullopt when every width up to budget is refuted.
// Exhaustive: driven by a dynamic program over (vertex subset, label
// partition) states, so intended for n <= 10.
std::optional<int> exact_cliquewidth(const Graph& g, int budget);

// Symbolic bookkeeping for "bounded width after finitely many operations".
// The cited preservation results guarantee each operation kind keeps
// clique-width bounded but the multiplicative constants live in the source
// works, so this record never collapses to a number.
struct SymbolicBound {
  int residual_width = 0;
  std::map<std::string, int> operation_counts;  // kind -> times applied

  bool operator==(const SymbolicBound& other) const = default;

  // e.g. "bounded: residual width 3 after bipartite_complementation x6,
  // subgraph_complementation x1, vertex_deletion x10"
  std::string to_string() const;
};

SymbolicBound bound_after_transcript(
    int residual_width, const std::map<std::string, int>& operation_counts);

}  // namespace atomwidth::cwd
