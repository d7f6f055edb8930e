#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/int_matrix.hpp"

namespace qwalk {

/// Vertex label as seen outside the library: 1..n.
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 1..n.
///
/// Labels are 1-based at the interface and stored 0-based. The constructor
/// rejects loops, duplicate edges and out-of-range endpoints with
/// std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Edges as 1-based pairs (i < j), sorted.
  std::vector<Edge> edges() const;

  /// Neighbours of vertex v (1-based), ascending.
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

 private:
  std::size_t index(Vertex v) const;

  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

/// The Dynkin graph A_n: the path 1 - 2 - ... - n. Throws for n == 0.
Graph dynkin_a(std::size_t n);

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
/// Q(G) = A(G) + D(G).
IntMatrix signless_laplacian(const Graph& g);

/// Ordered cells of 1-based vertices.
struct EquitablePartition {
  std::vector<std::vector<Vertex>> cells;

  std::size_t size() const noexcept { return cells.size(); }
  friend bool operator==(const EquitablePartition&, const EquitablePartition&) = default;
};

/// Characteristic matrix C (n x r) and divisor matrix B (r x r) of an
/// equitable partition; A * C == C * B.
struct QuotientData {
  EquitablePartition partition;
  IntMatrix characteristic;
  IntMatrix divisor;
};

/// The mirror partition of A_n used for the quotient: cells {1,n}, {2,n-1},
/// ... and the middle singleton {(n+1)/2} when n is odd. ceil(n/2) cells.
EquitablePartition partition_pi(std::size_t n);

/// True iff every vertex of each cell S has the same number of neighbours in
/// each cell T. Throws std::invalid_argument when p is not a partition of
/// 1..n.
bool is_equitable(const Graph& g, const EquitablePartition& p);

/// Throws std::invalid_argument for a non-equitable partition.
QuotientData quotient(const Graph& g, const EquitablePartition& p);

/// Leading ceil(n/2) x ceil(n/2) block of D(A_n). Throws for n == 0.
IntMatrix reduced_degree_matrix(std::size_t n);

// Graph text format: "n" on the first line, then one "i j" edge per line
// (1-based). JSON: {"n": n, "edges": [[i, j], ...]}.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);
Graph parse_graph_json(std::string_view text);
std::string format_graph_json(const Graph& g);

}  // namespace qwalk
