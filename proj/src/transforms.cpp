#include "atomwidth/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace atomwidth::transforms {

namespace {

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

}  // namespace

std::string step_kind_name(StepKind kind) {
  switch (kind) {
    case StepKind::kDeleteVertex:
      return "vertex_deletion";
    case StepKind::kSubgraphComplement:
      return "subgraph_complementation";
    case StepKind::kBipartiteComplement:
      return "bipartite_complementation";
  }
  throw std::invalid_argument("unknown step kind");
}

Graph subgraph_complement(const Graph& g, const VertexSet& s) {
  core::validate_vertex_set(g, s);
  const std::vector<char> in = membership(g, s);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (!(in[static_cast<std::size_t>(u)] && in[static_cast<std::size_t>(v)]))
      edges.emplace_back(u, v);
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) edges.emplace_back(s[i], s[j]);
    }
  }
  return Graph(g.n(), edges);
}

Graph bipartite_complement(const Graph& g, const VertexSet& s,
                           const VertexSet& t) {
  core::validate_vertex_set(g, s);
  core::validate_vertex_set(g, t);
  VertexSet overlap;
  std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty())
    throw std::invalid_argument("the two sides must be disjoint");

  std::vector<int> side(static_cast<std::size_t>(g.n()), 0);
  for (int v : s) side[static_cast<std::size_t>(v)] = 1;
  for (int v : t) side[static_cast<std::size_t>(v)] = 2;
  const auto crosses = [&](int u, int v) {
    return side[static_cast<std::size_t>(u)] +
               side[static_cast<std::size_t>(v)] ==
           3;
  };

  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (!crosses(u, v)) edges.emplace_back(u, v);
  }
  for (int u : s) {
    for (int v : t) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.n(), edges);
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
  core::validate_vertex_set(g, s);
  return core::induced_subgraph(g, core::complement_set(g, s));
}

Graph apply_step(const Graph& g, const TransformStep& step) {
  switch (step.kind) {
    case StepKind::kDeleteVertex:
      return delete_vertices(g, VertexSet{step.vertex});
    case StepKind::kSubgraphComplement:
      return subgraph_complement(g, step.set_s);
    case StepKind::kBipartiteComplement:
      return bipartite_complement(g, step.set_s, step.set_t);
  }
  throw std::invalid_argument("unknown step kind");
}

Graph k_subdivide(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("subdivision count must be >= 0");
  const auto original = g.edges();
  const int m = static_cast<int>(original.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>((k + 1) * m));
  for (int rank = 0; rank < m; ++rank) {
    const auto& [u, v] = original[static_cast<std::size_t>(rank)];
    if (k == 0) {
      edges.emplace_back(u, v);
      continue;
    }
    const int base = g.n() + rank * k;
    edges.emplace_back(u, base);
    for (int pos = 0; pos + 1 < k; ++pos)
      edges.emplace_back(base + pos, base + pos + 1);
    edges.emplace_back(base + k - 1, v);
  }
  return Graph(g.n() + k * m, edges);
}

Graph line_graph(const Graph& g) {
  const auto original = g.edges();
  const int m = static_cast<int>(original.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const auto& [u1, v1] = original[static_cast<std::size_t>(a)];
      const auto& [u2, v2] = original[static_cast<std::size_t>(b)];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        edges.emplace_back(a, b);
    }
  }
  return Graph(m, edges);
}

Graph twin_double(const Graph& g) {
  if (g.n() < 2 || !core::is_connected(g))
    throw std::invalid_argument(
        "twin doubling requires a connected graph on at least two vertices");
  const int n = g.n();
  std::vector<std::pair<int, int>> edges;
  edges.reserve(4 * g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u, v + n);
    edges.emplace_back(u + n, v);
    edges.emplace_back(u + n, v + n);
  }
  return Graph(2 * n, edges);
}

Graph add_apex_pair(const Graph& g) {
  const int n = g.n();
  if (static_cast<long long>(g.edges().size()) * 2 >=
      static_cast<long long>(n) * (n - 1))
    throw std::invalid_argument(
        "adding an apex pair requires at least one non-edge");
  std::vector<std::pair<int, int>> edges = g.edges();
  for (int v = 0; v < n; ++v) {
    edges.emplace_back(v, n);
    edges.emplace_back(v, n + 1);
  }
  return Graph(n + 2, edges);
}

}  // namespace atomwidth::transforms
