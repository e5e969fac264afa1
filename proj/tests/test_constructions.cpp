#include "atomwidth/constructions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "atomwidth/catalog.hpp"
#include "atomwidth/certificate.hpp"
#include "atomwidth/graph.hpp"
#include "atomwidth/induced.hpp"
#include "atomwidth/isomorphism.hpp"
#include "atomwidth/recognizers.hpp"
#include "atomwidth/transforms.hpp"

namespace constructions = atomwidth::constructions;
namespace core = atomwidth::core;
namespace cwd = atomwidth::cwd;
namespace recognizers = atomwidth::recognizers;
namespace transforms = atomwidth::transforms;

using core::Graph;
using core::VertexSet;

namespace {

using Edge = std::pair<int, int>;

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

TEST(WallTest, MatchesTheGoldenEdgeListAtHeightTwo) {
  // Hand-derived from the frozen layout: ids run row by row, the top row
  // losing position (0, 0) and the last row losing (5, 2).
  const std::vector<Edge> golden{
      {0, 1},  {0, 6},   {1, 2},   {2, 3},   {2, 8},   {3, 4},   {4, 10},
      {5, 6},  {5, 11},  {6, 7},   {7, 8},   {7, 13},  {8, 9},   {9, 10},
      {9, 15}, {11, 12}, {12, 13}, {13, 14}, {14, 15}};
  Graph w = constructions::wall(2);
  EXPECT_EQ(w.n(), 16);
  EXPECT_EQ(w.edges(), golden);
}

TEST(WallTest, MatchesTheGoldenEdgeListAtHeightThree) {
  const std::vector<Edge> golden{
      {0, 1},   {0, 8},   {1, 2},   {2, 3},   {2, 10},  {3, 4},   {4, 5},
      {4, 12},  {5, 6},   {6, 14},  {7, 8},   {7, 15},  {8, 9},   {9, 10},
      {9, 17},  {10, 11}, {11, 12}, {11, 19}, {12, 13}, {13, 14}, {13, 21},
      {15, 16}, {16, 17}, {16, 23}, {17, 18}, {18, 19}, {18, 25}, {19, 20},
      {20, 21}, {20, 27}, {21, 22}, {22, 29}, {23, 24}, {24, 25}, {25, 26},
      {26, 27}, {27, 28}, {28, 29}};
  Graph w = constructions::wall(3);
  EXPECT_EQ(w.n(), 30);
  EXPECT_EQ(w.edges(), golden);
}

TEST(WallTest, MatchesThePinnedShapeAtSmallHeights) {
  struct Row {
    int height;
    int vertices;
    int edges;
  };
  for (Row row : {Row{2, 16, 19}, Row{3, 30, 38}, Row{4, 48, 63}}) {
    Graph w = constructions::wall(row.height);
    EXPECT_EQ(w.n(), row.vertices) << "height " << row.height;
    EXPECT_EQ(w.m(), row.edges) << "height " << row.height;
    EXPECT_LE(max_degree(w), 3) << "height " << row.height;
    EXPECT_TRUE(recognizers::is_bipartite(w).has_value())
        << "height " << row.height;
    auto coords = constructions::wall_coordinates(row.height);
    EXPECT_EQ(static_cast<int>(coords.size()), row.vertices);
  }
  EXPECT_THROW(constructions::wall(1), std::invalid_argument);
  EXPECT_THROW(constructions::wall(0), std::invalid_argument);
}

TEST(WallTest, OneSubdivisionMatchesThePinnedCounts) {
  Graph s = transforms::k_subdivide(constructions::wall(2), 1);
  EXPECT_EQ(s.n(), 35);
  EXPECT_EQ(s.m(), 38);
}

TEST(WallTest, EmbedsInTheNextHeightAtTheSamePositions) {
  for (int h : {2, 3}) {
    Graph small = constructions::wall(h);
    Graph big = constructions::wall(h + 1);
    auto small_coords = constructions::wall_coordinates(h);
    auto big_coords = constructions::wall_coordinates(h + 1);
    std::map<std::pair<int, int>, int> big_id;
    for (int v = 0; v < big.n(); ++v) big_id[big_coords[v]] = v;
    VertexSet image;
    for (const auto& xy : small_coords) {
      auto it = big_id.find(xy);
      ASSERT_NE(it, big_id.end()) << "position missing at height " << h + 1;
      image.push_back(it->second);
    }
    std::sort(image.begin(), image.end());
    EXPECT_EQ(core::induced_subgraph(big, image), small) << "height " << h;
  }
}

TEST(GridTest, BuildsTheRectangularLattice) {
  Graph g = constructions::grid_graph(2, 3);
  EXPECT_EQ(g.n(), 6);
  EXPECT_EQ(g.m(), 7);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(0, 4));
  EXPECT_THROW(constructions::grid_graph(0, 2), std::invalid_argument);

  // The n x n grid appears inside the (n+1) x (n+1) grid on the positions
  // with both coordinates below n.
  Graph small = constructions::grid_graph(3, 3);
  Graph big = constructions::grid_graph(4, 4);
  VertexSet image;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) image.push_back(r * 4 + c);
  EXPECT_EQ(core::induced_subgraph(big, image), small);
  EXPECT_TRUE(recognizers::contains_induced(big, small).has_value());
}

// ---------------------------------------------------------------------------
// Pinned vertex/edge counts for each generator at its smallest size. Every
// count below is derived by hand from the documented construction rules.
// ---------------------------------------------------------------------------

TEST(GeneratorShapeTest, LineGraphWall) {
  // wall(2) has six degree-3 vertices and ten degree-2 vertices, so its
  // line graph has 19 vertices and 6*3 + 10*1 = 28 edges.
  Graph g = constructions::line_graph_wall(2);
  EXPECT_EQ(g.n(), 19);
  EXPECT_EQ(g.m(), 28);
}

TEST(GeneratorShapeTest, ApexedCoBell) {
  // 2x2 grid: 4 vertices, 4 edges -> subdivision has 8 vertices, 8 edges,
  // plus 2 diagonal edges in the single cell. The complement has
  // C(8,2) - 10 = 18 edges; the dominating pair adds 16 more.
  Graph g = constructions::apexed_co_bell(2);
  EXPECT_EQ(g.n(), 10);
  EXPECT_EQ(g.m(), 34);
}

TEST(GeneratorShapeTest, ColoredWall) {
  // Height-5 mirrored wall: 70 vertices, 94 edges; colour classes of sizes
  // 18, 17, 18, 17 add C(18,2)*2 + C(17,2)*2 = 578 clique edges.
  Graph g = constructions::colored_wall(2);
  EXPECT_EQ(g.n(), 70);
  EXPECT_EQ(g.m(), 672);
  Graph co = constructions::colored_wall_co(2);
  EXPECT_EQ(co, core::complement(g));
}

TEST(GeneratorShapeTest, DiamondP2P4Apex) {
  // Subdivided wall(2): 35 vertices, 38 edges; the parity sides have 8
  // vertices each (64 join edges); the apex meets the 19 subdivision
  // vertices.
  Graph g = constructions::diamond_p2p4_apex(2);
  EXPECT_EQ(g.n(), 36);
  EXPECT_EQ(g.m(), 121);
  EXPECT_EQ(constructions::diamond_p2p4_apex_co(2), core::complement(g));
}

TEST(GeneratorShapeTest, BipcompSubdividedWall) {
  // 16 originals vs 19 subdivision vertices: 16*19 - 38 = 266 edges.
  Graph g = constructions::bipcomp_subdivided_wall(2);
  EXPECT_EQ(g.n(), 35);
  EXPECT_EQ(g.m(), 266);
  EXPECT_EQ(constructions::bipcomp_subdivided_wall_co(2), core::complement(g));
}

TEST(GeneratorShapeTest, LozinVolz) {
  Graph base = constructions::lozin_volz_base(3);
  EXPECT_EQ(base.n(), 24);
  EXPECT_EQ(base.m(), 54);
  Graph g = constructions::lozin_volz(3);
  EXPECT_EQ(g.n(), 22);
  EXPECT_EQ(g.m(), 51);
  Graph apexed = constructions::apexed_co_lozin(3);
  EXPECT_EQ(apexed.n(), 26);
  EXPECT_EQ(apexed.m(), 270);
}

TEST(GeneratorShapeTest, Wall7Cliques) {
  // Base path graph: 149 vertices, 152 edges; cliques on 54, 57, and 38
  // vertices contribute 1431 + 1596 + 703 edges.
  Graph g = constructions::wall7_cliques(2);
  EXPECT_EQ(g.n(), 149);
  EXPECT_EQ(g.m(), 3882);
}

TEST(GeneratorShapeTest, Grid3Color) {
  // 7x7 grid: 84 lattice edges; diagonal classes of sizes 17, 16, 16 add
  // 136 + 120 + 120 clique edges.
  Graph g = constructions::grid3color(7);
  EXPECT_EQ(g.n(), 49);
  EXPECT_EQ(g.m(), 460);
  EXPECT_EQ(constructions::grid3color_co(7), core::complement(g));
}

TEST(GeneratorShapeTest, CochordalLayers) {
  Graph base = constructions::cochordal_base(3);
  EXPECT_EQ(base.n(), 15);
  EXPECT_EQ(base.m(), 45);
  Graph doubled = constructions::cochordal_K4free(3);
  EXPECT_EQ(doubled.n(), 30);
  EXPECT_EQ(doubled.m(), 180);
  // chordal_J(2): ten survivors keep 24 complement edges; the closing edge
  // joins the relabelled v_{0,3} (id 2) and v_{3,0} (id 7).
  Graph j = constructions::chordal_J(2);
  EXPECT_EQ(j.n(), 10);
  EXPECT_EQ(j.m(), 25);
  EXPECT_TRUE(j.adjacent(2, 7));
}

TEST(GeneratorShapeTest, QOfGrid) {
  // 2x2 grid: 4 vertices of degree 2, 4 edges. Side sizes 8 and 8; the
  // multipartite sides have 24 edges each and the matching adds 8.
  Graph q = constructions::q_of_grid(2);
  EXPECT_EQ(q.n(), 16);
  EXPECT_EQ(q.m(), 56);
  Graph doubled = constructions::q_of_grid_doubled(2);
  EXPECT_EQ(doubled.n(), 32);
  EXPECT_EQ(doubled.m(), 224);
  EXPECT_EQ(constructions::q_of_grid_co(2), core::complement(q));
}

TEST(GeneratorShapeTest, SubwallCoAApex) {
  Graph g = constructions::subwall_coA_apex(2);
  EXPECT_EQ(g.n(), 36);
  EXPECT_EQ(g.m(), 177);
}

TEST(GeneratorShapeTest, ChainOverSplit) {
  Graph g = constructions::chain_over_split(2);
  EXPECT_EQ(g.n(), 9);
  EXPECT_EQ(g.m(), 23);
}

TEST(GeneratorShapeTest, WallCoATwoApex) {
  Graph g = constructions::wall_coA_two_apex(2);
  EXPECT_EQ(g.n(), 18);
  EXPECT_EQ(g.m(), 79);
}

// ---------------------------------------------------------------------------
// Structural properties the generators promise beyond counts.
// ---------------------------------------------------------------------------

TEST(ColoredWallTest, ColourClassesPartitionIntoCliquesWithSparseCrossings) {
  for (int n : {2, 3}) {
    Graph g = constructions::colored_wall(n);
    auto classes = constructions::colored_wall_classes(n);
    std::vector<int> colour(g.n(), -1);
    int covered = 0;
    for (int k = 0; k < 4; ++k) {
      EXPECT_TRUE(core::is_clique(g, classes[k])) << "class " << k;
      for (int v : classes[k]) {
        EXPECT_EQ(colour[v], -1);
        colour[v] = k;
        ++covered;
      }
    }
    EXPECT_EQ(covered, g.n());
    // Every vertex meets each other colour class at most once: the
    // wall edges leaving a vertex go to three distinct other colours.
    for (int v = 0; v < g.n(); ++v) {
      std::array<int, 4> seen{0, 0, 0, 0};
      for (int u : g.neighbors(v)) {
        if (colour[u] != colour[v]) ++seen[colour[u]];
      }
      for (int k = 0; k < 4; ++k) {
        if (k == colour[v]) continue;
        EXPECT_LE(seen[k], 1) << "vertex " << v << " colour " << k;
      }
    }
  }
}

TEST(QOfGridTest, SidesAreMultipartiteAndMatchedPerfectly) {
  for (int t : {2, 3}) {
    Graph q = constructions::q_of_grid(t);
    int half = q.n() / 2;
    VertexSet a_side, b_side;
    for (int v = 0; v < half; ++v) a_side.push_back(v);
    for (int v = half; v < q.n(); ++v) b_side.push_back(v);
    EXPECT_TRUE(recognizers::is_complete_multipartite(
        core::induced_subgraph(q, a_side)));
    EXPECT_TRUE(recognizers::is_complete_multipartite(
        core::induced_subgraph(q, b_side)));
    EXPECT_TRUE(core::is_matching_between(q, a_side, b_side));
    int crossing = 0;
    for (const auto& [u, v] : q.edges()) {
      if (u < half && v >= half) ++crossing;
    }
    EXPECT_EQ(crossing, half);  // perfect: every vertex is matched
  }
}

TEST(LozinVolzTest, BaseCertificatePinsTheLowerBound) {
  // The natural grid partition of the base graph satisfies all eight
  // certificate properties with locality radius zero, so the bound equals
  // the layer count itself.
  for (int n : {4, 5}) {
    Graph base = constructions::lozin_volz_base(n);
    auto v_id = [n](int i, int j) { return i * n + (j - 1); };
    auto w_id = [n](int i, int j) {
      return (n + 1) * n + (i - 1) * (n + 1) + j;
    };
    cwd::WidthCertificate cert;
    cert.m = 0;
    cert.n = n;
    for (int k = 1; k <= n; ++k) {
      cert.classes[{k, 0}] = {w_id(k, 0)};
      cert.classes[{0, k}] = {v_id(0, k)};
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        cert.classes[{i, j}] = {v_id(i, j), w_id(i, j)};
      }
    }
    cwd::CertificateResult result = cwd::check_certificate(base, cert);
    EXPECT_TRUE(result.valid()) << "layer count " << n;
    ASSERT_TRUE(result.bound.has_value());
    EXPECT_EQ(*result.bound, n);
  }
}

TEST(NeedSCosPairTest, BuildsSubdividedWallsAndTheirComplements) {
  using recognizers::named_graph;
  // Both forbidden graphs outside the path/subdivided-claw forests: the
  // first component carries the claims.
  auto [w, cow] = constructions::need_s_cos_pair(named_graph("C4"),
                                                 named_graph("C6"));
  EXPECT_EQ(w, transforms::k_subdivide(constructions::wall(2), 6));
  EXPECT_EQ(w.n(), 130);
  EXPECT_EQ(w.m(), 133);
  EXPECT_EQ(cow, core::complement(w));
  EXPECT_TRUE(recognizers::is_h_free(w, named_graph("C4")));
  EXPECT_TRUE(recognizers::is_h_free(w, named_graph("C6")));
  EXPECT_TRUE(recognizers::is_atom(w));

  auto [w2, cow2] = constructions::need_s_cos_pair(named_graph("K4"),
                                                   named_graph("C5"));
  EXPECT_EQ(w2, transforms::k_subdivide(constructions::wall(2), 5));
  EXPECT_TRUE(recognizers::is_h_free(w2, named_graph("K4")));
  EXPECT_TRUE(recognizers::is_h_free(w2, named_graph("C5")));

  // Only the complements lie outside the class: the second component
  // carries the claims.
  auto [w3, cow3] = constructions::need_s_cos_pair(named_graph("3P2"),
                                                   named_graph("2P3"));
  EXPECT_EQ(cow3, core::complement(w3));
  EXPECT_TRUE(recognizers::is_h_free(cow3, named_graph("3P2")));
  EXPECT_TRUE(recognizers::is_h_free(cow3, named_graph("2P3")));
  EXPECT_TRUE(recognizers::is_atom(cow3));

  // Neither condition holds: paths stay inside the class both ways.
  EXPECT_THROW(
      constructions::need_s_cos_pair(named_graph("P4"), named_graph("C5")),
      std::invalid_argument);
  EXPECT_THROW(
      constructions::need_s_cos_pair(named_graph("P4"), named_graph("P4")),
      std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

TEST(RegistryTest, ExposesThirteenClaimFamiliesPlusTheWall) {
  const auto& specs = constructions::registry();
  std::set<std::string> ids;
  std::set<std::string> families;
  for (const auto& spec : specs) {
    EXPECT_TRUE(ids.insert(spec.id).second) << "duplicate id " << spec.id;
    EXPECT_NE(spec.build, nullptr) << spec.id;
    EXPECT_FALSE(spec.param_name.empty()) << spec.id;
    EXPECT_LE(spec.min_param, spec.smallest_params[0]) << spec.id;
    EXPECT_LT(spec.smallest_params[0], spec.smallest_params[1]) << spec.id;
    for (const std::string& name : spec.claimed_free) {
      EXPECT_TRUE(recognizers::try_named_graph(name).has_value())
          << spec.id << " claims unknown graph " << name;
    }
    if (spec.family != "wall") families.insert(spec.family);
  }
  EXPECT_EQ(families.size(), 13u);
  EXPECT_NE(constructions::find_construction("wall"), nullptr);
  EXPECT_NE(constructions::find_construction("chordal_J"), nullptr);
  EXPECT_EQ(constructions::find_construction("no_such_generator"), nullptr);
}

TEST(RegistryTest, RejectsParametersBelowTheMinimum) {
  for (const auto& spec : constructions::registry()) {
    EXPECT_THROW(spec.build(spec.min_param - 1), std::invalid_argument)
        << spec.id;
  }
}

// ---------------------------------------------------------------------------
// The registry-wide invariant: at the two smallest admissible parameters
// every generator is deterministic and realizes its claimed forbidden
// subgraphs, atom status, and global structure.
// ---------------------------------------------------------------------------

class ConstructionClaimsTest
    : public ::testing::TestWithParam<constructions::ConstructionSpec> {};

TEST_P(ConstructionClaimsTest, RealizesItsClaimsAtTheTwoSmallestSizes) {
  const auto& spec = GetParam();
  for (int p : spec.smallest_params) {
    SCOPED_TRACE(spec.id + "(" + std::to_string(p) + ")");
    const Graph g = spec.build(p);
    EXPECT_EQ(g, spec.build(p)) << "generator is not deterministic";
    for (const std::string& name : spec.claimed_free) {
      EXPECT_TRUE(recognizers::is_h_free(g, recognizers::named_graph(name)))
          << "contains an induced " << name;
    }
    if (spec.claimed_atom.has_value()) {
      EXPECT_EQ(recognizers::is_atom(g), *spec.claimed_atom);
    }
    if (spec.structure == "bipartite") {
      EXPECT_TRUE(recognizers::is_bipartite(g).has_value());
    } else if (spec.structure == "co-bipartite") {
      EXPECT_TRUE(recognizers::is_bipartite(core::complement(g)).has_value());
    } else if (spec.structure == "chordal") {
      EXPECT_TRUE(recognizers::is_chordal(g));
    } else if (spec.structure == "co-chordal") {
      EXPECT_TRUE(recognizers::is_chordal(core::complement(g)));
    } else {
      EXPECT_TRUE(spec.structure.empty()) << spec.structure;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    AllGenerators, ConstructionClaimsTest,
    ::testing::ValuesIn(constructions::registry()),
    [](const ::testing::TestParamInfo<constructions::ConstructionSpec>& info) {
      return info.param.id;
    });

}  // namespace
