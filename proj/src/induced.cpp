#include "atomwidth/induced.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace atomwidth::recognizers {

namespace {

int popcount_words(const std::vector<uint64_t>& w) {
  int c = 0;
  for (uint64_t x : w) c += std::popcount(x);
  return c;
}

void scan_bits(const std::vector<uint64_t>& mask,
               const std::function<bool(int)>& visit) {
  for (size_t w = 0; w < mask.size(); ++w) {
    uint64_t bits = mask[w];
    while (bits) {
      int v = static_cast<int>(w) * 64 + std::countr_zero(bits);
      if (!visit(v)) return;
      bits &= bits - 1;
    }
  }
}

// Cliques of size k listed as increasing sequences; DFS over ascending
// candidates, so the first hit is the lexicographically least one. rows may
// belong to g or to its complement (for independent sets).
bool find_clique(const std::vector<const uint64_t*>& rows, int words, int n,
                 int k, std::vector<int>& acc) {
  if (static_cast<int>(acc.size()) == k) return true;
  std::vector<uint64_t> cand(words, 0);
  int lo = acc.empty() ? 0 : acc.back() + 1;
  for (int w = lo / 64; w < words; ++w) cand[w] = ~uint64_t{0};
  if (lo % 64) cand[lo / 64] &= ~uint64_t{0} << (lo % 64);
  if (n % 64) cand[words - 1] &= (uint64_t{1} << (n % 64)) - 1;
  for (int v : acc)
    for (int w = 0; w < words; ++w) cand[w] &= rows[v][w];
  if (popcount_words(cand) < k - static_cast<int>(acc.size())) return false;
  bool found = false;
  scan_bits(cand, [&](int v) {
    acc.push_back(v);
    if (find_clique(rows, words, n, k, acc)) {
      found = true;
      return false;
    }
    acc.pop_back();
    return true;
  });
  return found;
}

std::optional<std::vector<int>> special_uniform(const Graph& g, int k,
                                                bool complement_rows) {
  int n = g.n();
  int words = g.row_words();
  std::vector<std::vector<uint64_t>> storage;
  std::vector<const uint64_t*> rows(n);
  if (!complement_rows) {
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);
  } else {
    storage.resize(n, std::vector<uint64_t>(words));
    for (int v = 0; v < n; ++v) {
      for (int w = 0; w < words; ++w) storage[v][w] = ~g.row(v)[w];
      storage[v][v / 64] &= ~(uint64_t{1} << (v % 64));  // no self-loop
      if (n % 64) storage[v][words - 1] &= (uint64_t{1} << (n % 64)) - 1;
      rows[v] = storage[v].data();
    }
  }
  std::vector<int> acc;
  if (find_clique(rows, words, n, k, acc)) return acc;
  return std::nullopt;
}

struct Matcher {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;  // h vertices in (degree desc, id asc) order
  std::vector<int> image;  // per order slot
  int words;

  Matcher(const Graph& gg, const Graph& hh) : g(gg), h(hh) {
    order.resize(h.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return h.degree(a) > h.degree(b);
    });
    words = g.row_words();
  }

  bool search(size_t depth) {
    if (depth == order.size()) return true;
    int hu = order[depth];
    std::vector<uint64_t> cand(words, ~uint64_t{0});
    if (g.n() % 64)
      cand[words - 1] = (uint64_t{1} << (g.n() % 64)) - 1;
    for (size_t i = 0; i < depth; ++i) {
      int gv = image[i];
      const uint64_t* row = g.row(gv);
      if (h.adjacent(hu, order[i])) {
        for (int w = 0; w < words; ++w) cand[w] &= row[w];
      } else {
        for (int w = 0; w < words; ++w) cand[w] &= ~row[w];
      }
      cand[gv / 64] &= ~(uint64_t{1} << (gv % 64));
    }
    bool found = false;
    int need = h.degree(hu);
    scan_bits(cand, [&](int v) {
      if (g.degree(v) < need) return true;
      image[depth] = v;
      if (search(depth + 1)) {
        found = true;
        return false;
      }
      return true;
    });
    return found;
  }
};

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g,
                                                 const Graph& h) {
  int k = h.n();
  if (k == 0) return std::vector<int>{};
  if (k > g.n()) return std::nullopt;
  int hm = h.m();
  if (hm == k * (k - 1) / 2) return special_uniform(g, k, false);
  if (hm == 0) return special_uniform(g, k, true);
  Matcher m(g, h);
  m.image.resize(k);
  if (!m.search(0)) return std::nullopt;
  std::vector<int> emb(k);
  for (int i = 0; i < k; ++i) emb[m.order[i]] = m.image[i];
  return emb;
}

bool is_h_free(const Graph& g, const Graph& h) {
  return !contains_induced(g, h).has_value();
}

bool is_h_free(const Graph& g, const std::vector<Graph>& hs) {
  for (const Graph& h : hs)
    if (!is_h_free(g, h)) return false;
  return true;
}

}  // namespace atomwidth::recognizers
