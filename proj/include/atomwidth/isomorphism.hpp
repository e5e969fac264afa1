#pragma once

#include <string>
#include <vector>

#include "atomwidth/graph.hpp"

namespace atomwidth::core {

// Canonical form via color refinement plus individualization backtracking,
// with pruning by automorphisms discovered during the search. Two graphs get
// equal keys iff they are isomorphic. Intended scale: n up to a few hundred
// for well-behaved graphs; the heavy users (exhaustive enumeration, solver
// memoization) stay below n = 16.
std::string canonical_key(const Graph& g);

// Permutation p with p[v] = position of v in the canonical ordering.
std::vector<int> canonical_permutation(const Graph& g);

bool is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace atomwidth::core
