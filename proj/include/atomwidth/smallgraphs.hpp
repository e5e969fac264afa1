#pragma once

#include <functional>
#include <string>
#include <vector>

#include "atomwidth/graph.hpp"

namespace atomwidth::core {

// Predicate selecting which graphs survive enumeration. Must describe a
// hereditary class (closed under vertex deletion): generation extends the
// surviving representatives on n-1 vertices, so a non-hereditary filter
// would lose graphs. Post-filter non-hereditary conditions afterwards.
using GraphFilter = std::function<bool(const Graph&)>;

// All graphs on exactly n vertices satisfying keep, one per isomorphism
// class, generated by extending the (n-1)-vertex representatives with every
// neighborhood of the new vertex and deduplicating by canonical key.
// keep == nullptr keeps everything.
//
// If cache_tag is nonempty and the ATOMWIDTH_CORPUS_DIR environment variable
// names a directory, each level is read from / written to
// <dir>/<cache_tag>_<n>.g6 (one graph6 line per representative).
std::vector<Graph> enumerate_graphs(int n, const GraphFilter& keep = nullptr,
                                    const std::string& cache_tag = {});

}  // namespace atomwidth::core
