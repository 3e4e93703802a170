#include "graph_io.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace arbordom {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::parse, "line " + std::to_string(line) + ": " + what);
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream iss(line);
  std::string tail;
  if (!(iss >> a >> b)) return false;
  if (iss >> tail) return false;  // trailing junk
  return true;
}

}  // namespace

Graph read_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;  // blank
    if (!parse_two_ints(line, n, m)) parse_fail(lineno, "expected header 'n m'");
    break;
  }
  if (n < 0 || m < 0) fail(Errc::parse, "missing or negative header 'n m'");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<bool> adjacency_seen;  // lazily built duplicate check
  std::vector<std::vector<int>> seen(static_cast<std::size_t>(n));

  long long want = m;
  while (want > 0 && std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    long long u = 0, v = 0;
    if (!parse_two_ints(line, u, v)) parse_fail(lineno, "expected edge 'u v'");
    if (u == v) parse_fail(lineno, "self-loop at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      parse_fail(lineno, "node ID out of range [0, " + std::to_string(n - 1) + "]");
    }
    if (u > v) parse_fail(lineno, "edge must be written 'u v' with u < v");
    auto& row = seen[static_cast<std::size_t>(u)];
    for (int w : row) {
      if (w == v) parse_fail(lineno, "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    row.push_back(static_cast<int>(v));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    --want;
  }
  if (want > 0) {
    fail(Errc::parse, "expected " + std::to_string(m) + " edges, found " +
                          std::to_string(m - want));
  }
  (void)adjacency_seen;

  try {
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    fail(Errc::parse, e.what());
  }
}

std::string write_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph_text(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io, "cannot open file for writing: " + path);
  out << write_graph_text(g);
  if (!out) fail(Errc::io, "failed writing graph file: " + path);
}

}  // namespace arbordom
