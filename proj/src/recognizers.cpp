#include "atomwidth/recognizers.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace atomwidth::recognizers {

using core::complement_set;
using core::make_vertex_set;

std::optional<SplitPartition> is_split(const Graph& g) {
  int n = g.n();
  std::vector<int> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  // Degree-sequence characterization: with d_1 >= ... >= d_n and
  // m = max{i : d_i >= i-1}, g is split iff
  // sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the m vertices of
  // largest degree form a clique with the rest independent.
  long long left = 0, right = 0;
  int m = 0;
  for (int i = 1; i <= n; ++i) {
    int d = g.degree(by_degree[i - 1]);
    if (d >= i - 1) m = i;
  }
  for (int i = 1; i <= n; ++i) {
    int d = g.degree(by_degree[i - 1]);
    if (i <= m)
      left += d;
    else
      right += d;
  }
  if (left != static_cast<long long>(m) * (m - 1) + right) return std::nullopt;
  SplitPartition out;
  out.clique = make_vertex_set(
      std::vector<int>(by_degree.begin(), by_degree.begin() + m));
  out.independent = complement_set(g, out.clique);
  if (!is_clique(g, out.clique) || !is_independent(g, out.independent))
    throw std::logic_error("split partition failed verification");
  return out;
}

std::optional<std::array<VertexSet, 2>> is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::array<VertexSet, 2> sides;
  for (int v = 0; v < g.n(); ++v) sides[color[v]].push_back(v);
  return sides;
}

namespace {

// Maximum cardinality search; returns vertices in reverse elimination order
// (position 0 eliminated last).
std::vector<int> mcs_order(const Graph& g) {
  int n = g.n();
  std::vector<int> weight(n, 0), order;
  std::vector<char> numbered(n, 0);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
    numbered[best] = 1;
    order.push_back(best);
    for (int u : g.neighbors(best))
      if (!numbered[u]) ++weight[u];
  }
  return order;
}

}  // namespace

bool is_chordal(const Graph& g) {
  int n = g.n();
  std::vector<int> order = mcs_order(g);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  // order reversed is a perfect elimination ordering iff g is chordal: each
  // vertex's earlier-position neighbors must form a clique, and it suffices
  // to check the latest such neighbor against the others.
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int parent = -1;
    for (int u : g.neighbors(v))
      if (pos[u] < i && (parent < 0 || pos[u] > pos[parent])) parent = u;
    if (parent < 0) continue;
    for (int u : g.neighbors(v)) {
      if (pos[u] < i && u != parent && !g.adjacent(u, parent)) return false;
    }
  }
  return true;
}

bool is_complete(const Graph& g) {
  return static_cast<long long>(g.m()) * 2 ==
         static_cast<long long>(g.n()) * (g.n() - 1);
}

bool is_complete_multipartite(const Graph& g) {
  Graph co = complement(g);
  for (const VertexSet& comp : connected_components(co))
    if (!is_clique(co, comp)) return false;
  return true;
}

std::optional<ChainOrdering> is_bipartite_chain(const Graph& g) {
  auto sides = is_bipartite(g);
  if (!sides) return std::nullopt;
  // In a bipartite graph, nested neighborhoods on one side rule out 2P2 and
  // vice versa, regardless of which valid bipartition was found.
  std::vector<int> a((*sides)[0].begin(), (*sides)[0].end());
  std::stable_sort(a.begin(), a.end(),
                   [&](int x, int y) { return g.degree(x) > g.degree(y); });
  int words = g.row_words();
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    const uint64_t* big = g.row(a[i]);
    const uint64_t* small = g.row(a[i + 1]);
    for (int w = 0; w < words; ++w)
      if (small[w] & ~big[w]) return std::nullopt;
  }
  return ChainOrdering{std::move(a), (*sides)[1]};
}

namespace {

bool is_path_component(const Graph& g, const VertexSet& comp) {
  int deg1 = 0;
  for (int v : comp) {
    int d = g.degree(v);
    if (d > 2) return false;
    if (d == 1) ++deg1;
  }
  // connected and acyclic with max degree 2: either a single vertex or
  // exactly two endpoints and no surplus edges
  long long edges = 0;
  for (int v : comp) edges += g.degree(v);
  edges /= 2;
  return edges == static_cast<long long>(comp.size()) - 1 &&
         (comp.size() == 1 || deg1 == 2);
}

bool is_subdivided_claw_component(const Graph& g, const VertexSet& comp) {
  if (comp.size() < 4) return false;
  long long edges = 0;
  int deg1 = 0, deg2 = 0, deg3 = 0;
  for (int v : comp) {
    int d = g.degree(v);
    edges += d;
    if (d == 1)
      ++deg1;
    else if (d == 2)
      ++deg2;
    else if (d == 3)
      ++deg3;
    else
      return false;
  }
  edges /= 2;
  // a tree with exactly one degree-3 vertex and three leaves is three paths
  // glued at a center
  return edges == static_cast<long long>(comp.size()) - 1 && deg3 == 1 &&
         deg1 == 3 && deg1 + deg2 + deg3 == static_cast<int>(comp.size());
}

}  // namespace

bool in_class_S(const Graph& h) {
  for (const VertexSet& comp : connected_components(h)) {
    Graph sub = induced_subgraph(h, comp);
    VertexSet all(sub.n());
    std::iota(all.begin(), all.end(), 0);
    if (!is_path_component(sub, all) && !is_subdivided_claw_component(sub, all))
      return false;
  }
  return true;
}

bool in_class_coS(const Graph& h) { return in_class_S(complement(h)); }

bool has_dominating_vertex(const Graph& h) {
  for (int v = 0; v < h.n(); ++v)
    if (h.degree(v) == h.n() - 1) return true;
  return false;
}

bool has_nonadjacent_pair_complete_to_rest(const Graph& h) {
  for (int u = 0; u < h.n(); ++u) {
    if (h.degree(u) != h.n() - 2) continue;
    for (int v = u + 1; v < h.n(); ++v)
      if (h.degree(v) == h.n() - 2 && !h.adjacent(u, v)) return true;
  }
  return false;
}

namespace {

// MCS-M: computes a minimal elimination ordering of g together with the
// fill edges of the corresponding minimal triangulation. order[i] is the
// i-th vertex eliminated.
struct MinimalOrdering {
  std::vector<int> order;
  std::vector<std::pair<int, int>> fill;
};

MinimalOrdering mcs_m(const Graph& g) {
  int n = g.n();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> order(n);
  std::vector<std::pair<int, int>> fill;
  for (int slot = n - 1; slot >= 0; --slot) {
    int v = -1;
    for (int u = 0; u < n; ++u)
      if (!numbered[u] && (v < 0 || weight[u] > weight[v])) v = u;
    numbered[v] = 1;
    order[slot] = v;
    // reach[u] = min over unnumbered u-v paths of the max weight of the
    // path's interior vertices; direct neighbors have no interior
    constexpr int kInf = 1 << 30;
    std::vector<int> reach(n, kInf);
    using Item = std::pair<int, int>;  // (bottleneck, vertex)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (int u : g.neighbors(v)) {
      if (numbered[u]) continue;
      reach[u] = -1;
      pq.push({-1, u});
    }
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > reach[u]) continue;
      int through = std::max(d, weight[u]);
      for (int x : g.neighbors(u)) {
        if (numbered[x] || through >= reach[x]) continue;
        reach[x] = through;
        pq.push({through, x});
      }
    }
    for (int u = 0; u < n; ++u) {
      if (numbered[u] || reach[u] >= weight[u]) continue;
      // includes all unnumbered direct neighbors (reach = -1 < weight? only
      // if weight > -1, always true)
      ++weight[u];
      if (!g.adjacent(u, v)) fill.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return {std::move(order), std::move(fill)};
}

VertexSet component_of(const Graph& g, int s, const std::vector<char>& blocked) {
  VertexSet comp;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    comp.push_back(v);
    for (int u : g.neighbors(v)) {
      if (!seen[u] && !blocked[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool verified_cutset(const Graph& g, const VertexSet& cut) {
  if (!is_clique(g, cut)) return false;
  std::vector<char> blocked(g.n(), 0);
  for (int v : cut) blocked[v] = 1;
  int first = -1;
  for (int v = 0; v < g.n(); ++v)
    if (!blocked[v]) {
      first = v;
      break;
    }
  if (first < 0) return false;
  VertexSet comp = component_of(g, first, blocked);
  return comp.size() + cut.size() < static_cast<size_t>(g.n());
}

}  // namespace

std::optional<VertexSet> find_clique_cutset(const Graph& g) {
  int n = g.n();
  if (n == 0) return std::nullopt;
  if (!is_connected(g)) return VertexSet{};
  MinimalOrdering mo = mcs_m(g);
  // adjacency of the minimal triangulation g + fill
  Graph h = g;
  for (auto [u, v] : mo.fill) h.add_edge(u, v);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[mo.order[i]] = i;
  // Scan in elimination order: every clique minimal separator of g shows up
  // as the later-neighborhood of some vertex in the triangulation.
  for (int i = 0; i < n; ++i) {
    int v = mo.order[i];
    VertexSet cut;
    for (int u : h.neighbors(v))
      if (pos[u] > i) cut.push_back(u);
    std::sort(cut.begin(), cut.end());
    if (cut.size() + 1 == static_cast<size_t>(n)) continue;
    if (!is_clique(g, cut)) continue;
    std::vector<char> blocked(n, 0);
    for (int u : cut) blocked[u] = 1;
    VertexSet comp = component_of(g, v, blocked);
    if (comp.size() + cut.size() < static_cast<size_t>(n)) {
      if (!verified_cutset(g, cut))
        throw std::logic_error("clique cutset failed verification");
      return cut;
    }
  }
  return std::nullopt;
}

namespace {

bool disconnects(const Graph& g, const std::vector<char>& blocked) {
  int first = -1, outside = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!blocked[v]) {
      if (first < 0) first = v;
      ++outside;
    }
  if (first < 0) return false;
  return static_cast<int>(component_of(g, first, blocked).size()) < outside;
}

bool any_clique_cutset(const Graph& g, std::vector<int>& clique,
                       std::vector<char>& blocked, int lo,
                       std::optional<VertexSet>& out) {
  if (disconnects(g, blocked)) {
    out = make_vertex_set(clique);
    return true;
  }
  for (int v = lo; v < g.n(); ++v) {
    bool extends = true;
    for (int u : clique)
      if (!g.adjacent(u, v)) {
        extends = false;
        break;
      }
    if (!extends) continue;
    clique.push_back(v);
    blocked[v] = 1;
    if (any_clique_cutset(g, clique, blocked, v + 1, out)) return true;
    blocked[v] = 0;
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique_cutset_brute(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  std::optional<VertexSet> out;
  std::vector<int> clique;
  std::vector<char> blocked(g.n(), 0);
  any_clique_cutset(g, clique, blocked, 0, out);
  return out;
}

bool is_atom(const Graph& g) {
  return is_connected(g) && !find_clique_cutset(g).has_value();
}

}  // namespace atomwidth::recognizers
