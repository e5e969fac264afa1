#include "atomwidth/certificate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace atomwidth::cwd {

namespace {

std::string class_name(std::pair<int, int> idx) {
  return "V(" + std::to_string(idx.first) + "," + std::to_string(idx.second) +
         ")";
}

// Positions of every vertex: pos[v] = class index pair.
std::vector<std::pair<int, int>> locate_vertices(const Graph& g,
                                                 const WidthCertificate& cert) {
  if (cert.m < 0) {
    throw std::invalid_argument("certificate needs m >= 0");
  }
  if (cert.n <= cert.m + 1) {
    throw std::invalid_argument("certificate needs n > m + 1");
  }
  std::vector<std::pair<int, int>> pos(g.n(), {-1, -1});
  for (const auto& [idx, members] : cert.classes) {
    if (idx.first < 0 || idx.first > cert.n || idx.second < 0 ||
        idx.second > cert.n) {
      throw std::invalid_argument("class index " + class_name(idx) +
                                  " outside the (n + 1) x (n + 1) range");
    }
    for (int v : members) {
      if (v < 0 || v >= g.n()) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " outside the host graph");
      }
    }
    core::validate_vertex_set(g, members);
    for (int v : members) {
      if (pos[v].first != -1) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in two classes");
      }
      pos[v] = idx;
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (pos[v].first == -1) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " missing from the partition");
    }
  }
  return pos;
}

}  // namespace

CertificateResult check_certificate(const Graph& g,
                                    const WidthCertificate& cert) {
  const auto pos = locate_vertices(g, cert);
  const int n = cert.n;
  const int m = cert.m;

  auto members = [&cert](int i, int j) -> const VertexSet& {
    static const VertexSet kEmpty;
    auto it = cert.classes.find({i, j});
    return it == cert.classes.end() ? kEmpty : it->second;
  };

  CertificateResult result;
  auto report = [&result](CertificateViolation v) {
    result.violations.push_back(std::move(v));
  };

  // Properties 1-2: border classes hold at most one vertex each.
  for (int i = 1; i <= n; ++i) {
    const auto& cls = members(i, 0);
    if (cls.size() > 1) {
      report({1,
              {i, 0},
              {-1, -1},
              cls,
              class_name({i, 0}) + " holds " + std::to_string(cls.size()) +
                  " vertices, limit 1"});
    }
  }
  for (int j = 1; j <= n; ++j) {
    const auto& cls = members(0, j);
    if (cls.size() > 1) {
      report({2,
              {0, j},
              {-1, -1},
              cls,
              class_name({0, j}) + " holds " + std::to_string(cls.size()) +
                  " vertices, limit 1"});
    }
  }

  // Property 3: interior classes are nonempty.
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (members(i, j).empty()) {
        report({3, {i, j}, {-1, -1}, {}, class_name({i, j}) + " is empty"});
      }
    }
  }

  // Properties 4-5: every row and column induces a connected graph. An empty
  // section counts as disconnected.
  auto check_section = [&](int property, int fixed) {
    VertexSet section;
    for (int other = 0; other <= n; ++other) {
      const auto& cls =
          property == 4 ? members(fixed, other) : members(other, fixed);
      section.insert(section.end(), cls.begin(), cls.end());
    }
    std::sort(section.begin(), section.end());
    const std::string what = property == 4 ? "row" : "column";
    if (section.empty()) {
      report({property,
              property == 4 ? std::pair<int, int>{fixed, -1}
                            : std::pair<int, int>{-1, fixed},
              {-1, -1},
              {},
              what + " " + std::to_string(fixed) + " is empty"});
      return;
    }
    const Graph sub = core::induced_subgraph(g, section);
    const auto components = core::connected_components(sub);
    if (components.size() <= 1) return;
    int u = section[components[0][0]];
    int v = section[components[1][0]];
    report({property,
            property == 4 ? std::pair<int, int>{fixed, -1}
                          : std::pair<int, int>{-1, fixed},
            {-1, -1},
            {std::min(u, v), std::max(u, v)},
            what + " " + std::to_string(fixed) + " induces " +
                std::to_string(components.size()) +
                " components; vertices " + std::to_string(u) + " and " +
                std::to_string(v) + " are separated"});
  };
  for (int i = 1; i <= n; ++i) check_section(4, i);
  for (int j = 1; j <= n; ++j) check_section(5, j);

  // Properties 6-8: adjacency locality, one report per offending class pair.
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
  auto report_edge = [&](int property, std::pair<int, int> a,
                         std::pair<int, int> b, int u, int v,
                         const std::string& why) {
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return;
    report({property,
            a,
            b,
            {std::min(u, v), std::max(u, v)},
            "edge " + std::to_string(u) + "-" + std::to_string(v) +
                " between " + class_name(a) + " and " + class_name(b) + " " +
                why});
  };

  for (auto [u, v] : g.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const int x = flip == 0 ? u : v;
      const int y = flip == 0 ? v : u;
      const auto [i, j] = pos[x];
      const auto [k, l] = pos[y];
      if (i >= 1 && j >= 1 && l == 0 && k >= 1) {
        // y sits in a left-border class V(k,0).
        if (i > k) {
          report_edge(6, {k, 0}, {i, j}, y, x,
                      "needs row " + std::to_string(i) +
                          " <= " + std::to_string(k));
        }
      }
      if (i >= 1 && j >= 1 && k == 0 && l >= 1) {
        // y sits in a top-border class V(0,l).
        if (j > l) {
          report_edge(7, {0, l}, {i, j}, y, x,
                      "needs column " + std::to_string(j) +
                          " <= " + std::to_string(l));
        }
      }
      if (flip == 0 && i >= 1 && j >= 1 && k >= 1 && l >= 1) {
        if (std::abs(k - i) > m || std::abs(l - j) > m) {
          report_edge(8, {i, j}, {k, l}, x, y,
                      "spans offsets (" + std::to_string(std::abs(k - i)) +
                          "," + std::to_string(std::abs(l - j)) +
                          "), limit m = " + std::to_string(m));
        }
      }
    }
  }

  std::stable_sort(
      result.violations.begin(), result.violations.end(),
      [](const CertificateViolation& a, const CertificateViolation& b) {
        return a.property < b.property;
      });
  if (result.violations.empty()) {
    result.bound = (n - 1) / (m + 1) + 1;
  }
  return result;
}

}  // namespace atomwidth::cwd
