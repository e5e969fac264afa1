#include "atomwidth/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace atomwidth::core {

namespace {

// Returns the next line that carries content, with comments stripped.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    bool blank = true;
    for (char c : line) {
      if (!isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (!blank) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line))
    throw std::invalid_argument("edge list: missing header line");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw std::invalid_argument("edge list: bad header line");
  std::string trailing;
  if (header >> trailing)
    throw std::invalid_argument("edge list: trailing data on header line");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line))
      throw std::invalid_argument("edge list: fewer edges than declared");
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v))
      throw std::invalid_argument("edge list: bad edge line");
    if (es >> trailing)
      throw std::invalid_argument("edge list: trailing data on edge line");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list: vertex id out of range");
    if (u >= v) throw std::invalid_argument("edge list: edges must have u < v");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw std::invalid_argument("edge list: duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line(in, line))
    throw std::invalid_argument("edge list: more edges than declared");
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string encode_graph6(const Graph& g) {
  int n = g.n();
  if (n > 258047) throw std::invalid_argument("graph6: graph too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph decode_graph6(const std::string& s) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (s.size() - pos < k) throw std::invalid_argument("graph6: truncated");
  };
  auto sextet = [&]() {
    need(1);
    unsigned char c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad byte");
    return static_cast<int>(c - 63);
  };
  need(1);
  long long n;
  if (s[pos] != '~') {
    n = sextet();
  } else {
    ++pos;
    need(1);
    if (s[pos] == '~')
      throw std::invalid_argument("graph6: 8-byte sizes unsupported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet();
    if (n <= 62) throw std::invalid_argument("graph6: non-minimal size prefix");
  }
  if (n > 258047) throw std::invalid_argument("graph6: graph too large");
  Graph g(static_cast<int>(n));
  long long pairs = n * (n - 1) / 2;
  long long bytes = (pairs + 5) / 6;
  if (static_cast<long long>(s.size() - pos) != bytes)
    throw std::invalid_argument("graph6: wrong length");
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        acc = sextet();
        nbits = 6;
      }
      if ((acc >> --nbits) & 1) g.add_edge(u, static_cast<int>(v));
    }
  }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding");
  return g;
}

}  // namespace atomwidth::core
