#include "atomwidth/catalog.hpp"

#include <cctype>
#include <stdexcept>

namespace atomwidth::recognizers {

Graph path_graph(int t) {
  if (t < 1) throw std::invalid_argument("P_t needs t >= 1");
  Graph g(t);
  for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int t) {
  if (t < 3) throw std::invalid_argument("C_t needs t >= 3");
  Graph g(t);
  for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, t - 1);
  return g;
}

Graph complete_graph(int t) {
  if (t < 1) throw std::invalid_argument("K_t needs t >= 1");
  Graph g(t);
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) g.add_edge(i, j);
  return g;
}

Graph edgeless_graph(int t) {
  if (t < 1) throw std::invalid_argument("tP1 needs t >= 1");
  return Graph(t);
}

Graph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("K_{s,t} needs s,t >= 1");
  Graph g(s + t);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < t; ++j) g.add_edge(i, s + j);
  return g;
}

Graph subdivided_claw(int h, int i, int j) {
  if (!(1 <= h && h <= i && i <= j))
    throw std::invalid_argument("S_{h,i,j} needs 1 <= h <= i <= j");
  Graph g(1 + h + i + j);
  int next = 1;
  for (int len : {h, i, j}) {
    int prev = 0;
    for (int step = 0; step < len; ++step) {
      g.add_edge(std::min(prev, next), std::max(prev, next));
      prev = next++;
    }
  }
  return g;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad graph name '" + s + "': " + why);
  }

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat_word(const char* w) {
    size_t len = std::string(w).size();
    if (s.compare(pos, len, w) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  int number() {
    if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a number");
    long v = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000000) fail("number too large");
    }
    return static_cast<int>(v);
  }

  Graph base() {
    if (eat_word("paw")) return complement(disjoint_union(path_graph(1), path_graph(3)));
    if (eat_word("diamond"))
      return complement(disjoint_union(edgeless_graph(2), path_graph(2)));
    if (eat_word("gem")) return complement(disjoint_union(path_graph(1), path_graph(4)));
    if (eat('P')) return path_graph(number());
    if (eat('C')) return cycle_graph(number());
    if (eat('K')) {
      int a = number();
      if (eat('_')) return complete_bipartite(a, number());
      return complete_graph(a);
    }
    if (eat('S')) {
      int h = number();
      if (!eat('_')) fail("S needs three arm lengths");
      int i = number();
      if (!eat('_')) fail("S needs three arm lengths");
      return subdivided_claw(h, i, number());
    }
    fail("expected a graph family");
  }

  Graph term() {
    int count = 1;
    if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
      count = number();
    if (count < 1) fail("copy count must be >= 1");
    Graph one = base();
    Graph out = one;
    for (int c = 1; c < count; ++c) out = disjoint_union(out, one);
    return out;
  }

  Graph sum() {
    Graph out = term();
    while (eat('+')) out = disjoint_union(out, term());
    return out;
  }

  Graph parse() {
    bool co = eat_word("co");
    Graph out = sum();
    if (pos != s.size()) fail("trailing characters");
    return co ? complement(out) : out;
  }
};

}  // namespace

Graph named_graph(const std::string& name) {
  Parser p(name);
  Graph g = p.parse();
  g.set_name(name);
  return g;
}

std::optional<Graph> try_named_graph(const std::string& name) {
  try {
    return named_graph(name);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace atomwidth::recognizers
