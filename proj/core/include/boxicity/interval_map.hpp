#ifndef BOXICITY_INTERVAL_MAP_HPP
#define BOXICITY_INTERVAL_MAP_HPP

#include "boxicity/graph.hpp"
#include "boxicity/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace boxicity {

/// Bijection between vertices 1..n and ranks 1..n, kept in both directions.
class Permutation {
 public:
  Permutation() = default;

  /// The identity on 1..n.
  static Permutation identity(std::size_t n);
  /// order[i] is the vertex holding rank i+1.
  static Permutation from_order(std::vector<Vertex> order);
  /// ranks[v-1] is the rank of vertex v.
  static Permutation from_ranks(const std::vector<std::size_t>& ranks);

  std::size_t size() const { return order_.size(); }
  std::size_t rank(Vertex v) const { return rank_[v - 1]; }
  Vertex at(std::size_t rank) const { return order_[rank - 1]; }
  /// Vertices in increasing rank.
  std::span<const Vertex> order() const { return order_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<std::size_t> rank_;
};

/// Ranks of the members of `subset` under the projection of `pi` onto the
/// subset: result[i] is the position (1-based) of subset[i] among the subset
/// members sorted by pi. Throws std::invalid_argument on an out-of-range or
/// repeated vertex.
std::vector<std::size_t> project(const Permutation& pi,
                                 std::span<const Vertex> subset);

/// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline bool intersects(const Interval& a, const Interval& b) {
  return (a.lo > b.lo ? a.lo : b.lo) <= (a.hi < b.hi ? a.hi : b.hi);
}

/// One interval per vertex; the intersection graph of the intervals is an
/// interval graph on 1..n.
class IntervalRepresentation {
 public:
  IntervalRepresentation() = default;
  /// Throws std::invalid_argument if some interval has lo > hi.
  explicit IntervalRepresentation(std::vector<Interval> intervals);

  std::size_t order() const { return intervals_.size(); }
  const Interval& operator[](Vertex v) const { return intervals_[v - 1]; }
  std::span<const Interval> intervals() const { return intervals_; }

  bool adjacent(Vertex u, Vertex v) const {
    return intersects((*this)[u], (*this)[v]);
  }

  friend bool operator==(const IntervalRepresentation&,
                         const IntervalRepresentation&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// The interval supergraph M(g, pi): vertex u gets [min rank over N(u)+u,
/// rank of u]. One pass over the ranks, O(n + m).
IntervalRepresentation interval_supergraph(const Graph& g,
                                           const Permutation& pi);

/// Edges of the intersection graph, sorted. Endpoint sweep,
/// O(n log n + output).
std::vector<Edge> interval_edges(const IntervalRepresentation& ir);

/// Same result by testing every pair, O(n^2).
std::vector<Edge> interval_edges_pairwise(const IntervalRepresentation& ir);

/// Uniform permutation of 1..n by Fisher-Yates.
Permutation random_permutation(std::size_t n, Rng& rng);

}  // namespace boxicity

#endif  // BOXICITY_INTERVAL_MAP_HPP
