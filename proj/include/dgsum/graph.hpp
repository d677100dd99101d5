#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dgsum/matrix.hpp"

namespace dgsum {

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 1.0;
};

/// Simple weighted directed graph: no self-loops, at most one edge per
/// unordered vertex pair, all weights positive. Vertex ids are dense and
/// 0-based.
struct DirectedGraph {
  int n = 0;
  std::vector<Edge> edges;
};

/// n x n non-negative adjacency: a(i,j) = weight of edge i -> j.
struct AsymmetricAdjacency {
  Matrix a;
};

/// n x n skew-symmetric adjacency: t(i,j) = w and t(j,i) = -w for an edge
/// i -> j of weight w. t = -t^T holds bit-exactly.
struct SkewAdjacency {
  Matrix t;
};

/// Throws std::runtime_error on any invariant violation.
void validate(const DirectedGraph& g);

/// Parse the edge-list text format: one `src dst [weight]` per line, weight
/// defaults to 1.0, `#` starts a comment, an optional `# n=<int>` header
/// fixes the vertex count. Errors carry the offending line number.
DirectedGraph load_edge_list(std::istream& in);
DirectedGraph load_edge_list(const std::string& text);

/// Canonical serialization: `# n=<int>` header, edges sorted by (src, dst),
/// weights printed with round-trip precision. load_edge_list inverts it.
std::string serialize_edge_list(const DirectedGraph& g);

AsymmetricAdjacency to_asymmetric(const DirectedGraph& g);
SkewAdjacency to_skew(const DirectedGraph& g);
/// Undirected skeleton: w(i,j) = w(j,i) = |t(i,j)|.
Matrix symmetrize(const DirectedGraph& g);

}  // namespace dgsum
