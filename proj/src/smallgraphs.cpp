#include "atomwidth/smallgraphs.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "atomwidth/io.hpp"
#include "atomwidth/isomorphism.hpp"

namespace atomwidth::core {

namespace {

std::filesystem::path cache_file(const std::string& tag, int n) {
  const char* dir = std::getenv("ATOMWIDTH_CORPUS_DIR");
  if (!dir || !*dir || tag.empty()) return {};
  return std::filesystem::path(dir) / (tag + "_" + std::to_string(n) + ".g6");
}

std::vector<Graph> load_cache(const std::filesystem::path& path) {
  std::vector<Graph> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(decode_graph6(line));
  }
  return out;
}

void store_cache(const std::filesystem::path& path,
                 const std::vector<Graph>& graphs) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) return;  // cache is best-effort
  for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

std::vector<Graph> level(int n, const GraphFilter& keep,
                         const std::string& tag) {
  if (n <= 0) throw std::invalid_argument("enumerate_graphs: n must be >= 1");
  auto path = cache_file(tag, n);
  if (!path.empty() && std::filesystem::exists(path)) return load_cache(path);

  std::vector<Graph> out;
  if (n == 1) {
    Graph k1(1);
    if (!keep || keep(k1)) out.push_back(k1);
  } else {
    std::vector<Graph> prev = level(n - 1, keep, tag);
    std::unordered_set<std::string> seen;
    for (const Graph& base : prev) {
      for (uint32_t mask = 0; mask < (uint32_t{1} << (n - 1)); ++mask) {
        Graph g(n);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < n - 1; ++u)
          if ((mask >> u) & 1) g.add_edge(u, n - 1);
        if (keep && !keep(g)) continue;
        if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
      }
    }
  }
  if (!path.empty()) store_cache(path, out);
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const GraphFilter& keep,
                                    const std::string& cache_tag) {
  return level(n, keep, cache_tag);
}

}  // namespace atomwidth::core
