#include "dgsum/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dgsum/util.hpp"

namespace dgsum {

namespace {

std::uint64_t pair_key(int a, int b) {
  int lo = a < b ? a : b;
  int hi = a < b ? b : a;
  return (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint32_t>(hi);
}

[[noreturn]] void fail_line(int line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

void validate(const DirectedGraph& g) {
  if (g.n < 0) throw std::runtime_error("negative vertex count");
  std::set<std::uint64_t> seen;
  for (const Edge& e : g.edges) {
    if (e.src < 0 || e.src >= g.n || e.dst < 0 || e.dst >= g.n)
      throw std::runtime_error("vertex id out of range: " + std::to_string(e.src) + " -> " +
                               std::to_string(e.dst));
    if (e.src == e.dst) throw std::runtime_error("self-loop at vertex " + std::to_string(e.src));
    if (!(e.weight > 0.0)) throw std::runtime_error("non-positive edge weight");
    if (!seen.insert(pair_key(e.src, e.dst)).second)
      throw std::runtime_error("duplicate edge pair {" + std::to_string(e.src) + ", " +
                               std::to_string(e.dst) + "}");
  }
}

DirectedGraph load_edge_list(std::istream& in) {
  DirectedGraph g;
  int n_override = -1;
  std::set<std::uint64_t> seen;
  int max_id = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') {
      // Recognize the `# n=<int>` header; other comments are ignored.
      std::string body = line.substr(pos + 1);
      body.erase(std::remove_if(body.begin(), body.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 body.end());
      if (body.rfind("n=", 0) == 0) {
        try {
          n_override = std::stoi(body.substr(2));
        } catch (const std::exception&) {
          fail_line(lineno, "malformed header: " + line);
        }
        if (n_override < 0) fail_line(lineno, "negative vertex count in header");
      }
      continue;
    }
    std::istringstream ss(line);
    long long src, dst;
    if (!(ss >> src >> dst)) fail_line(lineno, "malformed edge line: " + line);
    double w = 1.0;
    std::string rest;
    if (ss >> rest) {
      try {
        size_t used = 0;
        w = std::stod(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(rest);
      } catch (const std::exception&) {
        fail_line(lineno, "malformed weight: " + rest);
      }
      std::string extra;
      if (ss >> extra) fail_line(lineno, "trailing tokens: " + extra);
    }
    if (src < 0 || dst < 0) fail_line(lineno, "negative vertex id");
    if (src == dst) fail_line(lineno, "self-loop at vertex " + std::to_string(src));
    if (w < 0.0) fail_line(lineno, "negative weight");
    if (w == 0.0) fail_line(lineno, "zero weight");
    if (!seen.insert(pair_key(static_cast<int>(src), static_cast<int>(dst))).second)
      fail_line(lineno, "duplicate edge pair {" + std::to_string(src) + ", " + std::to_string(dst) + "}");
    g.edges.push_back({static_cast<int>(src), static_cast<int>(dst), w});
    max_id = std::max(max_id, static_cast<int>(std::max(src, dst)));
  }
  g.n = max_id + 1;
  if (n_override >= 0) {
    if (n_override < g.n)
      throw std::runtime_error("header n=" + std::to_string(n_override) +
                               " smaller than largest vertex id " + std::to_string(max_id));
    g.n = n_override;
  }
  return g;
}

DirectedGraph load_edge_list(const std::string& text) {
  std::istringstream ss(text);
  return load_edge_list(ss);
}

std::string serialize_edge_list(const DirectedGraph& g) {
  std::vector<Edge> sorted = g.edges;
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  std::string out = "# n=" + std::to_string(g.n) + "\n";
  for (const Edge& e : sorted) {
    out += std::to_string(e.src);
    out += ' ';
    out += std::to_string(e.dst);
    out += ' ';
    out += fmt_double(e.weight);
    out += '\n';
  }
  return out;
}

AsymmetricAdjacency to_asymmetric(const DirectedGraph& g) {
  Matrix a(g.n, g.n);
  for (const Edge& e : g.edges) a(e.src, e.dst) = e.weight;
  return {a};
}

SkewAdjacency to_skew(const DirectedGraph& g) {
  Matrix t(g.n, g.n);
  for (const Edge& e : g.edges) {
    t(e.src, e.dst) = e.weight;
    t(e.dst, e.src) = -e.weight;
  }
  return {t};
}

Matrix symmetrize(const DirectedGraph& g) {
  Matrix w(g.n, g.n);
  for (const Edge& e : g.edges) {
    w(e.src, e.dst) = e.weight;
    w(e.dst, e.src) = e.weight;
  }
  return w;
}

}  // namespace dgsum
