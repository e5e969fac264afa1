#pragma once

#include <optional>
#include <string>

#include "atomwidth/graph.hpp"

namespace atomwidth::recognizers {

using core::Graph;

// Basic parametric families. Vertex layouts are fixed and documented so
// golden tests can pin explicit edge lists.
Graph path_graph(int t);                      // P_t: 0-1-...-(t-1)
Graph cycle_graph(int t);                     // C_t, t >= 3
Graph complete_graph(int t);                  // K_t
Graph edgeless_graph(int t);                  // tP1
Graph complete_bipartite(int s, int t);       // parts {0..s-1}, {s..s+t-1}
// S_{h,i,j}, 1 <= h <= i <= j: center 0, then the three arms in order,
// each arm a path of that many edges hanging off the center.
Graph subdivided_claw(int h, int i, int j);

// Name grammar (CLI and catalog):
//   name  := "co" sum | sum            ("co" complements the entire rest)
//   sum   := term ("+" term)*          (disjoint union)
//   term  := [count] base              (count >= 1 copies, e.g. 3P1, 2P2)
//   base  := P<t> | C<t> | K<t> | K<s>_<t> | S<h>_<i>_<j>
//            | "paw" | "diamond" | "gem"
// paw = co(P1+P3), diamond = co(2P1+P2), gem = co(P1+P4).
// The returned graph's name() is the input string.
Graph named_graph(const std::string& name);
std::optional<Graph> try_named_graph(const std::string& name);

}  // namespace atomwidth::recognizers
