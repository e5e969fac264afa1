#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace atomwidth::core {

// Vertex ids are dense 0-based ints. A VertexSet is sorted and duplicate-free
// within its host graph's id range.
using VertexSet = std::vector<int>;

// Finite simple undirected graph. Adjacency is stored as packed bit rows so
// the set algebra in the exponential searches stays cheap. Graphs are treated
// as immutable values by every library operation: transformations return new
// graphs; add_edge exists for construction only.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);  // rejects self-loops and out-of-range ids
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  // Packed adjacency row of v; row_words() words per row, bit u set iff u~v.
  int row_words() const { return words_; }
  const uint64_t* row(int v) const {
    return bits_.data() + static_cast<size_t>(v) * words_;
  }

  // Value equality on the labeled vertex set (name ignored).
  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const Graph& o) const { return !(*this == o); }

private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
  std::string name_;
};

// Throws std::invalid_argument unless s is sorted and duplicate-free, and
// std::out_of_range when an id falls outside g (matching Graph's accessors).
void validate_vertex_set(const Graph& g, const VertexSet& s);

// Sorts and rejects duplicates.
VertexSet make_vertex_set(std::vector<int> vertices);

// V(g) minus s.
VertexSet complement_set(const Graph& g, const VertexSet& s);

// Vertices reindexed by sorted position in s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// g2's ids offset by g1.n().
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Partition of V(g) into maximal connected sets, sorted by minimum member.
std::vector<VertexSet> connected_components(const Graph& g);

// Connected means nonempty with one component.
bool is_connected(const Graph& g);

// All unordered pairs u < v with N(u) = N(v); such pairs are non-adjacent.
std::vector<std::pair<int, int>> false_twin_pairs(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

// The pairwise conditions of the domain definitions; xs and ys must be
// disjoint (std::invalid_argument otherwise).
bool is_complete_to(const Graph& g, const VertexSet& xs, const VertexSet& ys);
bool is_anticomplete_to(const Graph& g, const VertexSet& xs,
                        const VertexSet& ys);
// Every vertex of xs and of ys meets at most one edge crossing the two sets.
bool is_matching_between(const Graph& g, const VertexSet& xs,
                         const VertexSet& ys);

}  // namespace atomwidth::core
