#include "atomwidth/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atomwidth/recognizers.hpp"
#include "atomwidth/transforms.hpp"

namespace atomwidth::constructions {
namespace {

using Edge = std::pair<int, int>;

void require_at_least(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw std::invalid_argument(std::string(what) + " must be at least " +
                                std::to_string(minimum));
  }
}

Edge ordered(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// Shared brick-lattice builder: positions (x, y) with 0 <= x <= 2h+1 and
// 0 <= y <= h, a horizontal path per row, vertical rungs where (x + y) % 2
// matches rung_parity, and the listed positions removed. Ids follow
// (y, x)-lexicographic order over the surviving positions.
struct BrickLattice {
  Graph graph;
  std::vector<std::pair<int, int>> coords;
  std::vector<std::vector<int>> id_at;  // id_at[x][y], -1 when trimmed
};

BrickLattice brick_lattice(int height, int rung_parity,
                           const std::vector<std::pair<int, int>>& trimmed) {
  const int width = 2 * height + 2;
  BrickLattice lat;
  lat.id_at.assign(width, std::vector<int>(height + 1, -1));
  for (int y = 0; y <= height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (std::find(trimmed.begin(), trimmed.end(),
                    std::pair<int, int>{x, y}) != trimmed.end()) {
        continue;
      }
      lat.id_at[x][y] = static_cast<int>(lat.coords.size());
      lat.coords.emplace_back(x, y);
    }
  }
  std::vector<Edge> edges;
  for (int y = 0; y <= height; ++y) {
    for (int x = 0; x < width; ++x) {
      int here = lat.id_at[x][y];
      if (here < 0) continue;
      if (x + 1 < width && lat.id_at[x + 1][y] >= 0) {
        edges.push_back(ordered(here, lat.id_at[x + 1][y]));
      }
      if (y + 1 <= height && (x + y) % 2 == rung_parity &&
          lat.id_at[x][y + 1] >= 0) {
        edges.push_back(ordered(here, lat.id_at[x][y + 1]));
      }
    }
  }
  lat.graph = Graph(static_cast<int>(lat.coords.size()), edges);
  return lat;
}

std::vector<std::pair<int, int>> wall_trim(int height) {
  std::vector<std::pair<int, int>> trimmed{{0, 0}};
  if (height % 2 == 1) {
    trimmed.emplace_back(0, height);
  } else {
    trimmed.emplace_back(2 * height + 1, height);
  }
  return trimmed;
}

BrickLattice wall_lattice(int height) {
  require_at_least(height, 2, "wall height");
  return brick_lattice(height, /*rung_parity=*/1, wall_trim(height));
}

// Mirrored orientation used by the coloured wall: rungs at even x + y and
// the two rightmost corner positions trimmed. The height is always odd.
BrickLattice mirrored_wall_lattice(int height) {
  const int right = 2 * height + 1;
  return brick_lattice(height, /*rung_parity=*/0,
                       {{right, 0}, {right, height}});
}

int colour_of(int x, int y) { return (x + 2 * y + 2) % 4; }

std::array<VertexSet, 4> mirrored_wall_colour_classes(const BrickLattice& lat) {
  std::array<VertexSet, 4> classes;
  for (int v = 0; v < lat.graph.n(); ++v) {
    auto [x, y] = lat.coords[v];
    classes[colour_of(x, y)].push_back(v);
  }
  return classes;
}

// Even/odd parity sides of a brick lattice's bipartition.
std::array<VertexSet, 2> parity_sides(const BrickLattice& lat) {
  std::array<VertexSet, 2> sides;
  for (int v = 0; v < lat.graph.n(); ++v) {
    auto [x, y] = lat.coords[v];
    sides[(x + y) % 2].push_back(v);
  }
  return sides;
}

// Id of the vertex that 1-subdivision inserts into edge (u, v) of g, given
// the lexicographic rank of g's edges.
class SubdivisionIndex {
 public:
  explicit SubdivisionIndex(const Graph& g) : offset_(g.n()) {
    int next = 0;
    for (const auto& e : g.edges()) rank_[e] = next++;
  }
  int operator()(int u, int v) const {
    return offset_ + rank_.at(ordered(u, v));
  }

 private:
  int offset_;
  std::map<Edge, int> rank_;
};

Graph with_extra_edges(const Graph& g, int n, std::vector<Edge> extra) {
  auto edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(n, edges);
}

}  // namespace

Graph grid_graph(int rows, int cols) {
  require_at_least(rows, 1, "grid row count");
  require_at_least(cols, 1, "grid column count");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int here = r * cols + c;
      if (c + 1 < cols) edges.push_back({here, here + 1});
      if (r + 1 < rows) edges.push_back({here, here + cols});
    }
  }
  return Graph(rows * cols, edges);
}

Graph wall(int height) { return wall_lattice(height).graph; }

std::vector<std::pair<int, int>> wall_coordinates(int height) {
  return wall_lattice(height).coords;
}

Graph line_graph_wall(int height) {
  return transforms::line_graph(wall(height));
}

Graph apexed_co_bell(int n) {
  require_at_least(n, 2, "grid side");
  Graph g = grid_graph(n, n);
  SubdivisionIndex sub(g);
  Graph h = transforms::k_subdivide(g, 1);
  std::vector<Edge> extra;
  for (int r = 0; r + 1 < n; ++r) {
    for (int c = 0; c + 1 < n; ++c) {
      int tl = r * n + c;
      int tr = tl + 1;
      int bl = tl + n;
      int br = bl + 1;
      extra.push_back(ordered(sub(tl, bl), sub(tl, tr)));  // left -- top
      extra.push_back(ordered(sub(bl, br), sub(tr, br)));  // bottom -- right
    }
  }
  Graph cells = with_extra_edges(h, h.n(), std::move(extra));
  return transforms::add_apex_pair(core::complement(cells));
}

Graph colored_wall(int n) {
  require_at_least(n, 2, "colour-wall parameter");
  BrickLattice lat = mirrored_wall_lattice(2 * n + 1);
  Graph g = lat.graph;
  for (const VertexSet& cls : mirrored_wall_colour_classes(lat)) {
    g = transforms::subgraph_complement(g, cls);
  }
  return g;
}

Graph colored_wall_co(int n) { return core::complement(colored_wall(n)); }

std::array<VertexSet, 4> colored_wall_classes(int n) {
  require_at_least(n, 2, "colour-wall parameter");
  return mirrored_wall_colour_classes(mirrored_wall_lattice(2 * n + 1));
}

Graph diamond_p2p4_apex(int n) {
  BrickLattice lat = wall_lattice(n);
  auto sides = parity_sides(lat);
  Graph h = transforms::k_subdivide(lat.graph, 1);
  std::vector<Edge> extra;
  for (int a : sides[0]) {
    for (int c : sides[1]) extra.push_back(ordered(a, c));
  }
  int apex = h.n();
  for (int b = lat.graph.n(); b < h.n(); ++b) extra.push_back({b, apex});
  return with_extra_edges(h, h.n() + 1, std::move(extra));
}

Graph diamond_p2p4_apex_co(int n) {
  return core::complement(diamond_p2p4_apex(n));
}

Graph bipcomp_subdivided_wall(int n) {
  Graph w = wall(n);
  Graph h = transforms::k_subdivide(w, 1);
  VertexSet originals, subdivisions;
  for (int v = 0; v < w.n(); ++v) originals.push_back(v);
  for (int v = w.n(); v < h.n(); ++v) subdivisions.push_back(v);
  return transforms::bipartite_complement(h, originals, subdivisions);
}

Graph bipcomp_subdivided_wall_co(int n) {
  return core::complement(bipcomp_subdivided_wall(n));
}

Graph lozin_volz_base(int n) {
  require_at_least(n, 3, "layer count");
  auto v_id = [n](int i, int j) { return i * n + (j - 1); };
  auto w_id = [n](int i, int j) { return (n + 1) * n + (i - 1) * (n + 1) + j; };
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = i; k <= n; ++k) edges.push_back(ordered(v_id(i, j), w_id(k, 0)));
      for (int k = j; k <= n; ++k) edges.push_back(ordered(w_id(i, j), v_id(0, k)));
      edges.push_back(ordered(v_id(i, j), w_id(i, j)));
      edges.push_back(ordered(v_id(0, j), w_id(i, 0)));
    }
  }
  return Graph(2 * n * (n + 1), edges);
}

Graph lozin_volz(int n) {
  Graph base = lozin_volz_base(n);
  int v_nn = n * n + (n - 1);
  int w_nn = base.n() - 1;
  return transforms::delete_vertices(base, {v_nn, w_nn});
}

Graph apexed_co_lozin(int n) {
  return transforms::add_apex_pair(core::complement(lozin_volz_base(n)));
}

Graph wall7_cliques(int n) {
  Graph w = wall(n);
  Graph w1 = transforms::k_subdivide(w, 1);
  Graph h = transforms::k_subdivide(w1, 3);
  // Every edge of w1 joins an original wall vertex (the smaller id) to a
  // first-round subdivision vertex, so of the three vertices replacing it
  // the first neighbours the originals and the third neighbours the
  // first-round side.
  VertexSet near_original, near_subdivision, middle;
  for (int v = 0; v < w.n(); ++v) near_original.push_back(v);
  for (int v = w.n(); v < w1.n(); ++v) near_subdivision.push_back(v);
  for (int e = 0; e < w1.m(); ++e) {
    near_subdivision.push_back(w1.n() + 3 * e);
    middle.push_back(w1.n() + 3 * e + 1);
    near_original.push_back(w1.n() + 3 * e + 2);
  }
  Graph g = transforms::subgraph_complement(h, near_original);
  g = transforms::subgraph_complement(g, near_subdivision);
  g = transforms::subgraph_complement(g, middle);
  return g;
}

Graph wall7_cliques_co(int n) {
  return transforms::twin_double(core::complement(wall7_cliques(n)));
}

Graph grid3color(int n) {
  require_at_least(n, 3, "grid side");
  Graph g = grid_graph(n, n);
  std::array<VertexSet, 3> classes;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) classes[(r + c) % 3].push_back(r * n + c);
  }
  for (const VertexSet& cls : classes) {
    g = transforms::subgraph_complement(g, cls);
  }
  return g;
}

Graph grid3color_co(int n) { return core::complement(grid3color(n)); }

Graph cochordal_base(int n) {
  require_at_least(n, 3, "layer count");
  auto id = [n](int i, int j) { return i * (n + 1) + j - 1; };
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = i; k <= n; ++k) edges.push_back(ordered(id(i, j), id(k, 0)));
      for (int k = j; k <= n; ++k) edges.push_back(ordered(id(i, j), id(0, k)));
      edges.push_back(ordered(id(i, 0), id(0, j)));
    }
  }
  return Graph((n + 1) * (n + 1) - 1, edges);
}

Graph cochordal_K4free(int n) {
  return transforms::twin_double(cochordal_base(n));
}

Graph chordal_J(int n) {
  require_at_least(n, 2, "layer count");
  const int big = n + 1;
  Graph co = core::complement(cochordal_base(big));
  auto id = [big](int i, int j) { return i * (big + 1) + j - 1; };
  std::vector<int> doomed;
  for (int i = 1; i <= big; ++i) {
    doomed.push_back(id(1, i));
    doomed.push_back(id(i, 1));
  }
  std::sort(doomed.begin(), doomed.end());
  doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
  Graph g = transforms::delete_vertices(co, doomed);
  auto survivor = [&doomed](int old_id) {
    auto below = std::lower_bound(doomed.begin(), doomed.end(), old_id);
    return old_id - static_cast<int>(below - doomed.begin());
  };
  return with_extra_edges(
      g, g.n(), {ordered(survivor(id(0, big)), survivor(id(big, 0)))});
}

Graph q_of_grid(int t) {
  require_at_least(t, 2, "grid side");
  Graph g = grid_graph(t, t);
  const auto grid_edges = g.edges();
  const int n = g.n();
  const int m = static_cast<int>(grid_edges.size());
  std::vector<int> start(n + 1, 0);
  for (int v = 0; v < n; ++v) start[v + 1] = start[v] + g.degree(v);
  const int a_total = start[n];  // == 2m
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      for (int p = start[u]; p < start[u + 1]; ++p) {
        for (int q = start[v]; q < start[v + 1]; ++q) edges.push_back({p, q});
      }
    }
  }
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      for (int p = 0; p < 2; ++p) {
        for (int q = 0; q < 2; ++q) {
          edges.push_back({a_total + 2 * e + p, a_total + 2 * f + q});
        }
      }
    }
  }
  std::vector<int> slot(n, 0);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = grid_edges[e];
    edges.push_back(ordered(a_total + 2 * e, start[u] + slot[u]++));
    edges.push_back(ordered(a_total + 2 * e + 1, start[v] + slot[v]++));
  }
  return Graph(2 * a_total, edges);
}

Graph q_of_grid_doubled(int t) { return transforms::twin_double(q_of_grid(t)); }

Graph q_of_grid_co(int t) { return core::complement(q_of_grid(t)); }

Graph subwall_coA_apex(int n) {
  Graph w = wall(n);
  Graph h = transforms::k_subdivide(w, 1);
  VertexSet originals;
  for (int v = 0; v < w.n(); ++v) originals.push_back(v);
  Graph g = transforms::subgraph_complement(h, originals);
  std::vector<Edge> extra;
  int apex = h.n();
  for (int b = w.n(); b < h.n(); ++b) extra.push_back({b, apex});
  return with_extra_edges(g, h.n() + 1, std::move(extra));
}

Graph chain_over_split(int n) {
  require_at_least(n, 2, "layer count");
  auto id = [n](int i, int j) { return i * (n + 1) + j - 1; };
  const int total = (n + 1) * (n + 1);
  const int last = total - 1;  // the (0, n+1) vertex
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = i; k <= n; ++k) edges.push_back(ordered(id(i, j), id(k, 0)));
      for (int k = j; k <= n; ++k) edges.push_back(ordered(id(i, j), id(0, k)));
      edges.push_back(ordered(id(i, j), last));
    }
  }
  Graph base(total, edges);
  VertexSet row_arm, column_arm;
  for (int i = 1; i <= n; ++i) row_arm.push_back(id(i, 0));
  for (int j = 1; j <= n; ++j) column_arm.push_back(id(0, j));
  column_arm.push_back(last);
  std::sort(row_arm.begin(), row_arm.end());
  Graph g = transforms::bipartite_complement(base, row_arm, column_arm);
  return transforms::subgraph_complement(g, row_arm);
}

Graph wall_coA_two_apex(int k) {
  BrickLattice lat = wall_lattice(k);
  auto sides = parity_sides(lat);
  Graph g = transforms::subgraph_complement(lat.graph, sides[0]);
  return transforms::add_apex_pair(g);
}

std::pair<Graph, Graph> need_s_cos_pair(const Graph& h1, const Graph& h2) {
  bool direct =
      !recognizers::in_class_S(h1) && !recognizers::in_class_S(h2);
  bool complemented =
      !recognizers::in_class_coS(h1) && !recognizers::in_class_coS(h2);
  if (!direct && !complemented) {
    throw std::invalid_argument(
        "either both forbidden graphs or both of their complements must lie "
        "outside the class of path/subdivided-claw forests");
  }
  int k = std::max(h1.n(), h2.n());
  Graph w = transforms::k_subdivide(wall(2), k);
  return {w, core::complement(w)};
}

namespace {

std::vector<ConstructionSpec> build_registry() {
  std::vector<ConstructionSpec> specs;
  auto add = [&specs](ConstructionSpec spec) { specs.push_back(std::move(spec)); };

  add({"wall", "wall", "h", 2, {2, 3}, {}, true, "bipartite",
       "sparse brick-wall backbone shared by the witness families", &wall});

  add({"line_graph_wall", "line_graph_wall", "k", 2, {2, 3},
       {"C4", "K1_3", "K4", "diamond"}, true, "",
       "witnesses unbounded clique-width for (C4, K1_3, K4, diamond)-free "
       "atoms", &line_graph_wall});

  add({"apexed_co_bell", "apexed_co_bell", "n", 2, {2, 3},
       {"2P2", "K3+P1", "4P1", "2P1+P2"}, true, "",
       "witnesses unbounded clique-width for (2P2, K3+P1, 4P1, 2P1+P2)-free "
       "atoms", &apexed_co_bell});

  add({"colored_wall", "colored_wall", "n", 2, {2, 3}, {"diamond", "5P1"},
       true, "",
       "witnesses unbounded clique-width for (diamond, 5P1)-free atoms",
       &colored_wall});
  add({"colored_wall_co", "colored_wall", "n", 2, {2, 3}, {"2P1+P2", "K5"},
       true, "",
       "witnesses unbounded clique-width for (2P1+P2, K5)-free atoms",
       &colored_wall_co});

  add({"diamond_p2p4_apex", "diamond_p2p4_apex", "n", 2, {2, 3},
       {"diamond", "P2+P4", "P1+P6"}, true, "",
       "witnesses unbounded clique-width for (diamond, P2+P4, P1+P6)-free "
       "atoms", &diamond_p2p4_apex});
  add({"diamond_p2p4_apex_co", "diamond_p2p4_apex", "n", 2, {2, 3},
       {"2P1+P2", "coP2+P4", "coP1+P6"}, true, "",
       "witnesses unbounded clique-width for (2P1+P2, co(P2+P4), "
       "co(P1+P6))-free atoms", &diamond_p2p4_apex_co});

  add({"bipcomp_subdivided_wall", "bipcomp_subdivided_wall", "n", 2, {2, 3},
       {"2P1+2P2", "2P1+P4", "4P1+P2", "3P2"}, true, "bipartite",
       "witnesses unbounded clique-width for bipartite (2P1+2P2, 2P1+P4, "
       "4P1+P2, 3P2)-free atoms", &bipcomp_subdivided_wall});
  add({"bipcomp_subdivided_wall_co", "bipcomp_subdivided_wall", "n", 2, {2, 3},
       {"co2P1+2P2", "co2P1+P4", "co4P1+P2", "co3P2"}, true, "co-bipartite",
       "witnesses unbounded clique-width for co-bipartite complements of "
       "(2P1+2P2, 2P1+P4, 4P1+P2, 3P2)-free atoms",
       &bipcomp_subdivided_wall_co});

  add({"lozin_volz", "lozin_volz", "n", 3, {3, 4}, {"2P3"}, true, "bipartite",
       "witnesses unbounded clique-width for bipartite 2P3-free atoms",
       &lozin_volz});
  add({"apexed_co_lozin", "lozin_volz", "n", 3, {3, 4}, {"co2P3"}, true,
       "co-bipartite",
       "witnesses unbounded clique-width for co-bipartite co(2P3)-free atoms",
       &apexed_co_lozin});

  add({"wall7_cliques", "wall7_cliques", "n", 2, {2, 3}, {"4P1", "gem"}, true,
       "",
       "witnesses unbounded clique-width for (4P1, gem)-free atoms",
       &wall7_cliques});
  add({"wall7_cliques_co", "wall7_cliques", "n", 2, {2, 3}, {"K4", "P1+P4"},
       true, "",
       "witnesses unbounded clique-width for (K4, P1+P4)-free atoms",
       &wall7_cliques_co});

  add({"grid3color", "grid3color", "n", 3, {7, 8}, {"4P1", "co3P1+P2"}, true,
       "",
       "witnesses unbounded clique-width for (4P1, co(3P1+P2))-free atoms",
       &grid3color});
  add({"grid3color_co", "grid3color", "n", 3, {7, 8}, {"K4", "3P1+P2"}, true,
       "",
       "witnesses unbounded clique-width for (K4, 3P1+P2)-free atoms",
       &grid3color_co});

  add({"cochordal_K4free", "cochordal_K4free", "n", 3, {3, 4}, {"K4"}, true,
       "co-chordal",
       "witnesses unbounded clique-width for K4-free co-chordal atoms",
       &cochordal_K4free});
  add({"chordal_J", "cochordal_K4free", "n", 2, {2, 3}, {"C4", "4P1"}, true,
       "",
       "witnesses unbounded clique-width for (C4, 4P1)-free atoms",
       &chordal_J});

  add({"q_of_grid", "q_of_grid", "t", 2, {2, 3}, {"gem", "P1+2P2"},
       std::nullopt, "",
       "base gadget for the (gem, P1+2P2)-free witness families", &q_of_grid});
  add({"q_of_grid_doubled", "q_of_grid", "t", 2, {2, 3}, {"gem", "P1+2P2"},
       true, "",
       "witnesses unbounded clique-width for (gem, P1+2P2)-free atoms",
       &q_of_grid_doubled});
  add({"q_of_grid_co", "q_of_grid", "t", 2, {2, 3}, {"P1+P4", "coP1+2P2"},
       true, "",
       "witnesses unbounded clique-width for (P1+P4, co(P1+2P2))-free atoms",
       &q_of_grid_co});

  add({"subwall_coA_apex", "subwall_coA_apex", "n", 2, {2, 3},
       {"coP2+P3", "coP1+2P2", "P1+2P2", "P6"}, true, "",
       "witnesses unbounded clique-width for (co(P2+P3), co(P1+2P2), "
       "P1+2P2, P6)-free atoms", &subwall_coA_apex});

  add({"chain_over_split", "chain_over_split", "n", 2, {2, 3},
       {"2P2", "coP2+P4"}, true, "",
       "witnesses unbounded clique-width for (2P2, co(P2+P4))-free atoms",
       &chain_over_split});

  add({"wall_coA_two_apex", "wall_coA_two_apex", "k", 2, {2, 3},
       {"2P2", "coP5", "co3P2"}, true, "",
       "witnesses unbounded clique-width for (2P2, co(P5), co(3P2))-free "
       "atoms", &wall_coA_two_apex});

  return specs;
}

}  // namespace

const std::vector<ConstructionSpec>& registry() {
  static const std::vector<ConstructionSpec> specs = build_registry();
  return specs;
}

const ConstructionSpec* find_construction(std::string_view id) {
  for (const ConstructionSpec& spec : registry()) {
    if (spec.id == id) return &spec;
  }
  return nullptr;
}

}  // namespace atomwidth::constructions
