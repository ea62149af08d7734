#ifndef BOXICITY_GRAPH_HPP
#define BOXICITY_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace boxicity {

/// Vertices are numbered 1..n.
using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n. Immutable after construction.
///
/// Adjacency lists are sorted ascending, so every iteration order derived
/// from a Graph is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Builds from a pair list. Duplicate pairs (in either orientation) are
  /// merged; self-loops and out-of-range endpoints throw std::invalid_argument.
  /// If `duplicates` is non-null it receives the number of merged pairs.
  Graph(std::size_t n, std::span<const Edge> edges,
        std::size_t* duplicates = nullptr);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[v - 1];
  }
  std::size_t degree(Vertex v) const { return adjacency_[v - 1].size(); }
  std::size_t max_degree() const { return max_degree_; }

  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 1 && v <= order(); }

  /// All edges, lexicographically sorted.
  std::vector<Edge> edges() const;
  /// All unordered pairs absent from the graph, lexicographically sorted.
  std::vector<Edge> non_edges() const;

  bool is_complete() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void finalize();

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

Graph complement(const Graph& g);

/// Subgraph induced on `keep`, relabelled 1..|keep| in the order given.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace boxicity

#endif  // BOXICITY_GRAPH_HPP
