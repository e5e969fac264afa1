#include "atomwidth/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace atomwidth::core {

namespace {

constexpr size_t kMaxStoredAutomorphisms = 64;

struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;                      // empty until the first leaf
  std::vector<int> best_pos;             // vertex -> canonical position
  std::vector<std::vector<int>> autos;   // automorphisms found at equal leaves

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {}

  // Stable renumbering by (current color, sorted neighbor colors). The new
  // partition refines the old one, so the loop terminates within n rounds.
  std::vector<int> refine(std::vector<int> col) const {
    std::vector<int> vals = col;
    std::sort(vals.begin(), vals.end());
    int ncolors = static_cast<int>(
        std::unique(vals.begin(), vals.end()) - vals.begin());
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> sigs(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> sig;
        sig.push_back(col[v]);
        for (int u : g.neighbors(v)) sig.push_back(col[u]);
        std::sort(sig.begin() + 1, sig.end());
        sigs[v] = {std::move(sig), v};
      }
      std::map<std::vector<int>, int> order;
      for (const auto& [sig, v] : sigs) order.emplace(sig, 0);
      int next = 0;
      for (auto& [sig, id] : order) id = next++;
      std::vector<int> out(n);
      for (const auto& [sig, v] : sigs) out[v] = order.at(sig);
      if (next == ncolors) return out;
      ncolors = next;
      col = std::move(out);
    }
  }

  std::string key_from(const std::vector<int>& pos) const {
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[pos[v]] = v;
    std::string key = std::to_string(n) + ":";
    int acc = 0, bits = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        acc = (acc << 1) | (g.adjacent(at[i], at[j]) ? 1 : 0);
        if (++bits == 8) {
          key.push_back(static_cast<char>(acc));
          acc = 0;
          bits = 0;
        }
      }
    }
    if (bits > 0) key.push_back(static_cast<char>(acc << (8 - bits)));
    return key;
  }

  void take_leaf(const std::vector<int>& pos) {
    std::string key = key_from(pos);
    if (best.empty() || key < best) {
      best = std::move(key);
      best_pos = pos;
      return;
    }
    if (key != best || autos.size() >= kMaxStoredAutomorphisms) return;
    // Equal keys give the automorphism v -> best^{-1}(pos(v)).
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[best_pos[v]] = v;
    std::vector<int> gamma(n);
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      gamma[v] = at[pos[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) autos.push_back(std::move(gamma));
  }

  void descend(const std::vector<int>& col, std::vector<int>& fixed) {
    // Pick the smallest non-singleton color class, lowest color on ties.
    std::vector<int> class_size(n, 0);
    for (int c : col) ++class_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (class_size[c] >= 2 &&
          (target < 0 || class_size[c] < class_size[target]))
        target = c;
    }
    if (target < 0) {
      take_leaf(col);  // discrete coloring: col is the position map
      return;
    }
    std::vector<int> tried;
    for (int u = 0; u < n; ++u) {
      if (col[u] != target) continue;
      bool pruned = false;
      for (const auto& gamma : autos) {
        bool fixes_prefix = true;
        for (int f : fixed) {
          if (gamma[f] != f) {
            fixes_prefix = false;
            break;
          }
        }
        if (!fixes_prefix) continue;
        for (int t : tried) {
          if (gamma[t] == u) {
            pruned = true;
            break;
          }
        }
        if (pruned) break;
      }
      if (pruned) continue;
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v) next[v] = 2 * col[v];
      next[u] = 2 * col[u] - 1;  // u splits off just below its class
      fixed.push_back(u);
      descend(refine(std::move(next)), fixed);
      fixed.pop_back();
      tried.push_back(u);
    }
  }

  std::string run() {
    if (n == 0) return "0:";
    std::vector<int> fixed;
    descend(refine(std::vector<int>(n, 0)), fixed);
    return best;
  }
};

}  // namespace

std::string canonical_key(const Graph& g) { return CanonSearch(g).run(); }

std::vector<int> canonical_permutation(const Graph& g) {
  CanonSearch s(g);
  s.run();
  return g.n() == 0 ? std::vector<int>{} : s.best_pos;
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n() || g1.m() != g2.m()) return false;
  std::vector<int> d1, d2;
  for (int v = 0; v < g1.n(); ++v) d1.push_back(g1.degree(v));
  for (int v = 0; v < g2.n(); ++v) d2.push_back(g2.degree(v));
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  return canonical_key(g1) == canonical_key(g2);
}

}  // namespace atomwidth::core
