#include "atomwidth/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace atomwidth::core {

namespace {

int words_for(int n) { return (n + 63) / 64; }

bool test_bit(const uint64_t* row, int v) {
  return (row[v >> 6] >> (v & 63)) & 1u;
}

}  // namespace

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return test_bit(row(u), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (test_bit(row(u), v)) return;
  bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
  ++m_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  const uint64_t* r = row(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= g.n())
      throw std::out_of_range("vertex id out of range");
    if (i > 0 && s[i - 1] >= s[i])
      throw std::invalid_argument("vertex set not sorted or has duplicates");
  }
}

VertexSet make_vertex_set(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("duplicate vertex in set");
  return vertices;
}

VertexSet complement_set(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  VertexSet out;
  out.reserve(g.n() - s.size());
  size_t i = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (i < s.size() && s[i] == v) {
      ++i;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  Graph out(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph out(g1.n() + g2.n());
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(u + g1.n(), v + g1.n());
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // discovery order = increasing minimum member
}

bool is_connected(const Graph& g) {
  return g.n() > 0 && connected_components(g).size() == 1;
}

std::vector<std::pair<int, int>> false_twin_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  int words = g.row_words();
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v)) continue;  // adjacent pairs differ at u itself
      bool equal = true;
      const uint64_t* ru = g.row(u);
      const uint64_t* rv = g.row(v);
      for (int w = 0; w < words && equal; ++w) equal = ru[w] == rv[w];
      if (equal) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  validate_vertex_set(g, s);
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

namespace {

void check_disjoint(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
  validate_vertex_set(g, xs);
  validate_vertex_set(g, ys);
  VertexSet inter;
  std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                        std::back_inserter(inter));
  if (!inter.empty()) throw std::invalid_argument("vertex sets overlap");
}

}  // namespace

bool is_complete_to(const Graph& g, const VertexSet& xs, const VertexSet& ys) {
  check_disjoint(g, xs, ys);
  for (int x : xs)
    for (int y : ys)
      if (!g.adjacent(x, y)) return false;
  return true;
}

bool is_anticomplete_to(const Graph& g, const VertexSet& xs,
                        const VertexSet& ys) {
  check_disjoint(g, xs, ys);
  for (int x : xs)
    for (int y : ys)
      if (g.adjacent(x, y)) return false;
  return true;
}

bool is_matching_between(const Graph& g, const VertexSet& xs,
                         const VertexSet& ys) {
  check_disjoint(g, xs, ys);
  for (int x : xs) {
    int cross = 0;
    for (int y : ys) cross += g.adjacent(x, y);
    if (cross > 1) return false;
  }
  for (int y : ys) {
    int cross = 0;
    for (int x : xs) cross += g.adjacent(x, y);
    if (cross > 1) return false;
  }
  return true;
}

}  // namespace atomwidth::core
