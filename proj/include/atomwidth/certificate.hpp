#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atomwidth/graph.hpp"

namespace atomwidth::cwd {

using core::Graph;
using core::VertexSet;

// A lower-bound certificate: a partition of the host graph's vertices into
// classes V_{i,j} indexed by pairs (i, j) with 0 <= i, j <= n, together with
// a locality radius m >= 0 and grid size n > m + 1. When the eight
// properties below hold, the host graph's clique-width is at least
// floor((n - 1) / (m + 1)) + 1.
//
// Absent keys denote empty classes; every vertex of the host graph must
// appear in exactly one class.
struct WidthCertificate {
  int m = 0;
  int n = 0;
  std::map<std::pair<int, int>, VertexSet> classes;
};

// The eight properties, numbered as reported in violations:
//  1. |V_{i,0}| <= 1 for 1 <= i <= n
//  2. |V_{0,j}| <= 1 for 1 <= j <= n
//  3. |V_{i,j}| >= 1 for 1 <= i, j <= n
//  4. the induced graph on row i (all V_{i,j}, 0 <= j <= n) is connected,
//     for 1 <= i <= n
//  5. the induced graph on column j (all V_{i,j}, 0 <= i <= n) is connected,
//     for 1 <= j <= n
//  6. a vertex of V_{k,0} adjacent to a vertex of V_{i,j} (i, j, k >= 1)
//     forces i <= k
//  7. a vertex of V_{0,k} adjacent to a vertex of V_{i,j} (i, j, k >= 1)
//     forces j <= k
//  8. a vertex of V_{i,j} adjacent to a vertex of V_{k,l} (all >= 1) forces
//     |k - i| <= m and |l - j| <= m
struct CertificateViolation {
  int property = 0;                      // 1..8
  std::pair<int, int> class_a{-1, -1};   // first class involved
  std::pair<int, int> class_b{-1, -1};   // second class, or (-1,-1)
  std::vector<int> vertices;             // offending vertices, sorted
  std::string message;
};

struct CertificateResult {
  // floor((n - 1) / (m + 1)) + 1 when all eight properties hold.
  std::optional<int> bound;
  // All detected violations otherwise, ordered by property number.
  std::vector<CertificateViolation> violations;

  bool valid() const { return bound.has_value(); }
};

// Checks the eight properties. Throws std::invalid_argument when the input
// is malformed: m < 0, n <= m + 1, a class index outside {0..n}^2, a vertex
// outside the host graph, or classes that overlap or fail to cover V(g).
CertificateResult check_certificate(const Graph& g,
                                    const WidthCertificate& cert);

}  // namespace atomwidth::cwd
