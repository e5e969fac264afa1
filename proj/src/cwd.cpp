#include "atomwidth/cwd.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "atomwidth/recognizers.hpp"

namespace atomwidth::cwd {

namespace {

void check_label(int label) {
  if (label < 1) {
    throw std::invalid_argument("labels must be positive, got " +
                                std::to_string(label));
  }
}

}  // namespace

CwdExpression::CwdExpression(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

CwdExpression CwdExpression::vertex(int label) {
  check_label(label);
  auto node = std::make_shared<Node>();
  node->kind = Kind::kVertex;
  node->a = label;
  node->vertices = 1;
  return CwdExpression(std::move(node));
}

CwdExpression CwdExpression::disjoint_union(CwdExpression left,
                                            CwdExpression right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kUnion;
  node->vertices = left.node_->vertices + right.node_->vertices;
  node->left = std::move(left.node_);
  node->right = std::move(right.node_);
  return CwdExpression(std::move(node));
}

CwdExpression CwdExpression::join(int label_a, int label_b,
                                  CwdExpression inner) {
  check_label(label_a);
  check_label(label_b);
  if (label_a == label_b) {
    throw std::invalid_argument("join requires two distinct labels, got " +
                                std::to_string(label_a) + " twice");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::kJoin;
  node->a = label_a;
  node->b = label_b;
  node->vertices = inner.node_->vertices;
  node->left = std::move(inner.node_);
  return CwdExpression(std::move(node));
}

CwdExpression CwdExpression::relabel(int from, int to, CwdExpression inner) {
  check_label(from);
  check_label(to);
  auto node = std::make_shared<Node>();
  node->kind = Kind::kRelabel;
  node->a = from;
  node->b = to;
  node->vertices = inner.node_->vertices;
  node->left = std::move(inner.node_);
  return CwdExpression(std::move(node));
}

CwdExpression CwdExpression::left() const {
  if (!node_->left) {
    throw std::logic_error("expression node has no child");
  }
  return CwdExpression(node_->left);
}

CwdExpression CwdExpression::right() const {
  if (!node_->right) {
    throw std::logic_error("expression node has no right child");
  }
  return CwdExpression(node_->right);
}

namespace {

void collect_labels(const CwdExpression& e, std::set<int>& labels) {
  switch (e.kind()) {
    case CwdExpression::Kind::kVertex:
      labels.insert(e.label_a());
      break;
    case CwdExpression::Kind::kUnion:
      collect_labels(e.left(), labels);
      collect_labels(e.right(), labels);
      break;
    case CwdExpression::Kind::kJoin:
    case CwdExpression::Kind::kRelabel:
      labels.insert(e.label_a());
      labels.insert(e.label_b());
      collect_labels(e.left(), labels);
      break;
  }
}

}  // namespace

int CwdExpression::width() const {
  std::set<int> labels;
  collect_labels(*this, labels);
  return static_cast<int>(labels.size());
}

bool CwdExpression::operator==(const CwdExpression& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind || x->a != y->a || x->b != y->b) return false;
  switch (x->kind) {
    case Kind::kVertex:
      return true;
    case Kind::kUnion:
      return CwdExpression(node_->left) == CwdExpression(other.node_->left) &&
             CwdExpression(node_->right) == CwdExpression(other.node_->right);
    case Kind::kJoin:
    case Kind::kRelabel:
      return CwdExpression(node_->left) == CwdExpression(other.node_->left);
  }
  return false;
}

namespace {

// Walks the tree left to right, assigning vertex ids in creation order;
// every operation's scope is the contiguous id range of its subtree.
struct EvalWalker {
  Graph* graph;
  std::vector<int>* labels;

  // Returns [begin, end) of the subtree's vertex ids.
  std::pair<int, int> walk(const CwdExpression& e) {
    switch (e.kind()) {
      case CwdExpression::Kind::kVertex: {
        int id = static_cast<int>(labels->size());
        labels->push_back(e.label_a());
        return {id, id + 1};
      }
      case CwdExpression::Kind::kUnion: {
        auto l = walk(e.left());
        auto r = walk(e.right());
        return {l.first, r.second};
      }
      case CwdExpression::Kind::kJoin: {
        auto range = walk(e.left());
        for (int u = range.first; u < range.second; ++u) {
          if ((*labels)[u] != e.label_a()) continue;
          for (int v = range.first; v < range.second; ++v) {
            if ((*labels)[v] == e.label_b()) graph->add_edge(u, v);
          }
        }
        return range;
      }
      case CwdExpression::Kind::kRelabel: {
        auto range = walk(e.left());
        for (int u = range.first; u < range.second; ++u) {
          if ((*labels)[u] == e.label_a()) (*labels)[u] = e.label_b();
        }
        return range;
      }
    }
    throw std::logic_error("unreachable expression kind");
  }
};

}  // namespace

LabeledGraph eval(const CwdExpression& expr) {
  LabeledGraph out{Graph(expr.vertex_count()), {}};
  out.labels.reserve(expr.vertex_count());
  EvalWalker walker{&out.graph, &out.labels};
  walker.walk(expr);
  return out;
}

namespace {

void print_to(const CwdExpression& e, std::string& out) {
  switch (e.kind()) {
    case CwdExpression::Kind::kVertex:
      out += "(v ";
      out += std::to_string(e.label_a());
      out += ')';
      return;
    case CwdExpression::Kind::kUnion:
      out += "(union ";
      print_to(e.left(), out);
      out += ' ';
      print_to(e.right(), out);
      out += ')';
      return;
    case CwdExpression::Kind::kJoin:
    case CwdExpression::Kind::kRelabel:
      out += e.kind() == CwdExpression::Kind::kJoin ? "(join " : "(relabel ";
      out += std::to_string(e.label_a());
      out += ' ';
      out += std::to_string(e.label_b());
      out += ' ';
      print_to(e.left(), out);
      out += ')';
      return;
  }
}

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& text) : text_(text) {}

  CwdExpression parse() {
    CwdExpression e = expression();
    skip_spaces();
    if (pos_ != text_.size()) {
      fail("trailing content after expression");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression parse error at position " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_spaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string word() {
    skip_spaces();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected an operation name");
    return text_.substr(start, pos_ - start);
  }

  int number() {
    skip_spaces();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a label");
    if (pos_ - start > 6) fail("label out of range");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  CwdExpression expression() {
    expect('(');
    std::string op = word();
    if (op == "v") {
      int label = number();
      expect(')');
      return CwdExpression::vertex(label);
    }
    if (op == "union") {
      CwdExpression l = expression();
      CwdExpression r = expression();
      expect(')');
      return CwdExpression::disjoint_union(std::move(l), std::move(r));
    }
    if (op == "join") {
      int a = number();
      int b = number();
      CwdExpression inner = expression();
      expect(')');
      return CwdExpression::join(a, b, std::move(inner));
    }
    if (op == "relabel") {
      int a = number();
      int b = number();
      CwdExpression inner = expression();
      expect(')');
      return CwdExpression::relabel(a, b, std::move(inner));
    }
    fail("unknown operation '" + op + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

std::string print_expression(const CwdExpression& expr) {
  std::string out;
  print_to(expr, out);
  return out;
}

CwdExpression parse_expression(const std::string& text) {
  return ExpressionParser(text).parse();
}

CwdExpression build_edgeless(int k) {
  if (k < 1) {
    throw std::invalid_argument("an expression must create at least 1 vertex");
  }
  CwdExpression e = CwdExpression::vertex(1);
  for (int i = 1; i < k; ++i) {
    e = CwdExpression::disjoint_union(std::move(e), CwdExpression::vertex(1));
  }
  return e;
}

CwdExpression build_complete(int k) {
  if (k < 1) {
    throw std::invalid_argument("an expression must create at least 1 vertex");
  }
  CwdExpression e = CwdExpression::vertex(1);
  for (int i = 1; i < k; ++i) {
    e = CwdExpression::disjoint_union(std::move(e), CwdExpression::vertex(2));
    e = CwdExpression::join(1, 2, std::move(e));
    e = CwdExpression::relabel(2, 1, std::move(e));
  }
  return e;
}

namespace {

// Builds any P4-free graph with labels {1, 2}, all vertices finishing on
// label 1: a disconnected graph is the union of its components, and a
// connected one on >= 2 vertices is the pairwise join of the components of
// its complement.
CwdExpression cograph_recursive(const Graph& g) {
  if (g.n() == 1) return CwdExpression::vertex(1);
  const auto components = core::connected_components(g);
  if (components.size() > 1) {
    CwdExpression acc = cograph_recursive(induced_subgraph(g, components[0]));
    for (size_t i = 1; i < components.size(); ++i) {
      acc = CwdExpression::disjoint_union(
          std::move(acc), cograph_recursive(induced_subgraph(g, components[i])));
    }
    return acc;
  }
  const Graph co = core::complement(g);
  const auto co_components = core::connected_components(co);
  if (co_components.size() == 1) {
    throw std::invalid_argument(
        "graph has an induced path on four vertices; the two-label scheme "
        "does not apply");
  }
  CwdExpression acc = cograph_recursive(induced_subgraph(g, co_components[0]));
  for (size_t i = 1; i < co_components.size(); ++i) {
    CwdExpression part =
        cograph_recursive(induced_subgraph(g, co_components[i]));
    acc = CwdExpression::disjoint_union(
        std::move(acc), CwdExpression::relabel(1, 2, std::move(part)));
    acc = CwdExpression::join(1, 2, std::move(acc));
    acc = CwdExpression::relabel(2, 1, std::move(acc));
  }
  return acc;
}

}  // namespace

CwdExpression build_cograph(const Graph& g) {
  if (g.n() == 0) {
    throw std::invalid_argument("an expression must create at least 1 vertex");
  }
  return cograph_recursive(g);
}

CwdExpression build_bipartite_chain(const Graph& g) {
  if (g.n() == 0) {
    throw std::invalid_argument("an expression must create at least 1 vertex");
  }
  const auto ordering = recognizers::is_bipartite_chain(g);
  if (!ordering) {
    throw std::invalid_argument(
        "graph is not bipartite with nested neighborhoods");
  }
  const auto& side_a = ordering->side_a;  // descending neighborhoods
  const int p = static_cast<int>(side_a.size());

  // Nested neighborhoods mean a vertex b of the other side is adjacent to
  // exactly the first deg(b) entries of side_a. Attach side_a back to front:
  // keep the other side on label 2, bring in side_a[i] on label 3 once every
  // b with deg(b) > i is present, join, and retire it to label 1.
  std::vector<std::vector<int>> b_by_degree(p + 1);
  for (int b : ordering->side_b) b_by_degree[g.degree(b)].push_back(b);

  std::optional<CwdExpression> acc;
  auto append = [&acc](CwdExpression piece) {
    if (!acc) {
      acc = std::move(piece);
    } else {
      acc = CwdExpression::disjoint_union(std::move(*acc), std::move(piece));
    }
  };

  for (int i = p; i >= 1; --i) {
    for (int b : b_by_degree[i]) {
      (void)b;
      append(CwdExpression::vertex(2));
    }
    append(CwdExpression::vertex(3));  // side_a[i - 1]
    acc = CwdExpression::join(3, 2, std::move(*acc));
    acc = CwdExpression::relabel(3, 1, std::move(*acc));
  }
  for (int b : b_by_degree[0]) {
    (void)b;
    append(CwdExpression::vertex(2));
  }
  return *acc;
}

namespace {

// State space for the exact solver: a subset S of vertices together with the
// partition of S into label classes after S has been fully built. A state is
// stored only if every class is externally uniform (all members share the
// same neighborhood outside S), which any state extendable to the whole
// graph must satisfy.
using ClassMask = uint32_t;
using Partition = std::vector<ClassMask>;

struct SolverContext {
  int n = 0;
  int k = 0;
  ClassMask full = 0;
  std::vector<ClassMask> adj;  // adjacency masks

  bool fully_adjacent(ClassMask a, ClassMask b) const {
    for (ClassMask rest = a; rest != 0; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if ((adj[u] & b) != b) return false;
    }
    return true;
  }

  bool any_edge(ClassMask a, ClassMask b) const {
    for (ClassMask rest = a; rest != 0; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      if ((adj[u] & b) != 0) return true;
    }
    return false;
  }

  ClassMask outside_signature(ClassMask cls, ClassMask s) const {
    return adj[std::countr_zero(cls)] & ~s;
  }
};

// The label classes present right after the union of two built subgraphs:
// some classes of the two sides share a label (pairing them merges), the
// rest keep distinct labels. Checks, for the resulting classes, that every
// edge of the graph crossing the union can be realized by joining two whole
// classes and no non-edge is forced:
//   - a class containing an edge across the two sides is dead (one label can
//     never be joined with itself);
//   - two classes with any cross edge between them must be fully adjacent.
// Survivors are coarsened every way that keeps classes externally uniform.
struct Combiner {
  const SolverContext& ctx;
  ClassMask s1, s2, merged;
  const Partition& rho1;
  const Partition& rho2;
  std::set<Partition>& out;

  std::vector<int> match;  // match[j] = index into rho1, or -1

  void run() {
    int p = static_cast<int>(rho1.size());
    int q = static_cast<int>(rho2.size());
    if (p + q - std::min(p, q) > ctx.k) return;
    match.assign(q, -1);
    descend(0, 0);
  }

  void descend(int j, ClassMask used) {
    int p = static_cast<int>(rho1.size());
    int q = static_cast<int>(rho2.size());
    if (j == q) {
      int matched = 0;
      for (int x : match) matched += x >= 0 ? 1 : 0;
      if (p + q - matched <= ctx.k) emit();
      return;
    }
    descend(j + 1, used);  // rho2[j] keeps its own label
    ClassMask sig2 = ctx.outside_signature(rho2[j], merged);
    for (int i = 0; i < p; ++i) {
      if (used & (1u << i)) continue;
      if (ctx.outside_signature(rho1[i], merged) != sig2) continue;
      match[j] = i;
      descend(j + 1, used | (1u << i));
      match[j] = -1;
    }
  }

  void emit() {
    Partition classes;
    std::vector<char> taken(rho1.size(), 0);
    for (size_t j = 0; j < rho2.size(); ++j) {
      if (match[j] >= 0) {
        classes.push_back(rho1[match[j]] | rho2[j]);
        taken[match[j]] = 1;
      } else {
        classes.push_back(rho2[j]);
      }
    }
    for (size_t i = 0; i < rho1.size(); ++i) {
      if (!taken[i]) classes.push_back(rho1[i]);
    }

    const int count = static_cast<int>(classes.size());
    for (int a = 0; a < count; ++a) {
      ClassMask a1 = classes[a] & s1;
      ClassMask a2 = classes[a] & s2;
      if (a1 != 0 && a2 != 0 && ctx.any_edge(a1, a2)) return;
      for (int b = a + 1; b < count; ++b) {
        bool cross = ctx.any_edge(classes[a] & s1, classes[b] & s2) ||
                     ctx.any_edge(classes[a] & s2, classes[b] & s1);
        if (cross && !ctx.fully_adjacent(classes[a], classes[b])) return;
      }
    }
    coarsen(classes);
  }

  // Enumerates every way of merging classes that share an outside
  // signature; differing signatures must stay separate.
  void coarsen(const Partition& classes) {
    std::vector<std::pair<ClassMask, ClassMask>> by_sig;  // (signature, class)
    by_sig.reserve(classes.size());
    for (ClassMask c : classes) {
      by_sig.emplace_back(ctx.outside_signature(c, merged), c);
    }
    std::stable_sort(by_sig.begin(), by_sig.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });

    Partition current;
    group_partitions(by_sig, 0, current);
  }

  void group_partitions(const std::vector<std::pair<ClassMask, ClassMask>>& items,
                        size_t start, Partition& current) {
    if (start == items.size()) {
      Partition sorted = current;
      std::sort(sorted.begin(), sorted.end());
      out.insert(std::move(sorted));
      return;
    }
    size_t end = start;
    while (end < items.size() && items[end].first == items[start].first) ++end;
    std::vector<ClassMask> group;
    for (size_t i = start; i < end; ++i) group.push_back(items[i].second);

    std::vector<ClassMask> blocks;
    set_partitions(group, 0, blocks, items, end, current);
  }

  void set_partitions(const std::vector<ClassMask>& group, size_t idx,
                      std::vector<ClassMask>& blocks,
                      const std::vector<std::pair<ClassMask, ClassMask>>& items,
                      size_t next_group, Partition& current) {
    if (idx == group.size()) {
      size_t base = current.size();
      current.insert(current.end(), blocks.begin(), blocks.end());
      group_partitions(items, next_group, current);
      current.resize(base);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= group[idx];
      set_partitions(group, idx + 1, blocks, items, next_group, current);
      blocks[b] &= ~group[idx];
    }
    blocks.push_back(group[idx]);
    set_partitions(group, idx + 1, blocks, items, next_group, current);
    blocks.pop_back();
  }
};

bool width_at_most(const SolverContext& base, int k) {
  const int n = base.n;
  if (n <= 1) return k >= 1;
  if (k >= n) return k >= 1;

  SolverContext ctx = base;
  ctx.k = k;

  std::vector<std::set<Partition>> states(size_t{1} << n);
  for (int v = 0; v < n; ++v) {
    states[size_t{1} << v].insert(Partition{ClassMask{1} << v});
  }

  for (ClassMask mask = 1; mask <= ctx.full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    ClassMask low = mask & (~mask + 1);
    auto& out = states[mask];
    for (ClassMask s1 = (mask - 1) & mask; s1 != 0; s1 = (s1 - 1) & mask) {
      if ((s1 & low) == 0) continue;
      ClassMask s2 = mask ^ s1;
      const auto& left = states[s1];
      const auto& right = states[s2];
      if (left.empty() || right.empty()) continue;
      for (const Partition& rho1 : left) {
        for (const Partition& rho2 : right) {
          Combiner combiner{ctx, s1, s2, mask, rho1, rho2, out, {}};
          combiner.run();
        }
      }
    }
    if (mask == ctx.full && !out.empty()) return true;
  }
  return !states[ctx.full].empty();
}

}  // namespace

std::optional<int> exact_cliquewidth(const Graph& g, int budget) {
  if (g.n() > 20) {
    throw std::invalid_argument(
        "exhaustive width search is limited to 20 vertices");
  }
  if (budget < 0) {
    throw std::invalid_argument("budget must be nonnegative");
  }
  if (g.n() == 0) return 0;

  SolverContext ctx;
  ctx.n = g.n();
  ctx.full = ctx.n == 32 ? ~ClassMask{0} : (ClassMask{1} << ctx.n) - 1;
  ctx.adj.assign(ctx.n, 0);
  for (auto [u, v] : g.edges()) {
    ctx.adj[u] |= ClassMask{1} << v;
    ctx.adj[v] |= ClassMask{1} << u;
  }

  for (int k = 1; k <= budget; ++k) {
    if (width_at_most(ctx, k)) return k;
  }
  return std::nullopt;
}

std::string SymbolicBound::to_string() const {
  std::ostringstream out;
  out << "bounded: residual width " << residual_width;
  if (!operation_counts.empty()) {
    out << " after ";
    bool first = true;
    for (const auto& [kind, count] : operation_counts) {
      if (!first) out << ", ";
      first = false;
      out << kind << " x" << count;
    }
  }
  return out.str();
}

SymbolicBound bound_after_transcript(
    int residual_width, const std::map<std::string, int>& operation_counts) {
  if (residual_width < 0) {
    throw std::invalid_argument("residual width must be nonnegative");
  }
  SymbolicBound record;
  record.residual_width = residual_width;
  for (const auto& [kind, count] : operation_counts) {
    if (count < 0) {
      throw std::invalid_argument("operation count must be nonnegative");
    }
    if (count > 0) record.operation_counts.emplace(kind, count);
  }
  return record;
}

}  // namespace atomwidth::cwd
