#ifndef BOXICITY_DERAND_HPP
#define BOXICITY_DERAND_HPP

#include "boxicity/box_representation.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/interval_map.hpp"
#include "boxicity/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace boxicity {

/// The first i vertices of a permutation being built left to right.
///
/// Besides positions it tracks, for every vertex v, the smallest position
/// among placed members of N(v) + v. For a placed vertex that value is the
/// left end of its interval in the finished interval supergraph; the right
/// end is its own position.
class PartialPermutation {
 public:
  static constexpr std::size_t kNone = 0;

  explicit PartialPermutation(const Graph& g);
  PartialPermutation(const Graph& g, std::span<const Vertex> prefix);

  std::size_t size() const { return order_.size(); }
  std::size_t order_of_graph() const { return position_.size(); }
  std::span<const Vertex> placed() const { return order_; }

  bool is_placed(Vertex v) const { return position_[v - 1] != kNone; }
  /// 1-based position, kNone if unplaced.
  std::size_t position(Vertex v) const { return position_[v - 1]; }
  /// Smallest position among placed members of N(v) + v, kNone if none.
  std::size_t first_position(Vertex v) const { return first_[v - 1]; }
  /// Interval of a placed vertex.
  Interval interval(Vertex v) const {
    return {static_cast<std::int64_t>(first_[v - 1]),
            static_cast<std::int64_t>(position_[v - 1])};
  }

  /// Appends u. Throws std::invalid_argument if u is out of range or placed.
  void place(const Graph& g, Vertex u);
  /// Removes the most recently placed vertex.
  void undo(const Graph& g);

 private:
  std::vector<Vertex> order_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> first_;
};

/// Exact value of the probability that a non-edge stays a non-edge, given
/// the prefix, in one of four shapes: 0, 1, 1/(a+2), 1/(a+2) + 1/(b+2).
struct SurvivalTerm {
  enum class Kind { zero, one, single, pair };
  Kind kind = Kind::zero;
  std::size_t a = 0;
  std::size_t b = 0;

  Rational value() const;
  friend bool operator==(const SurvivalTerm&, const SurvivalTerm&) = default;
};

/// Case analysis on which endpoints are placed and which have a placed
/// neighbour. Constant time. Requires (u, v) to be a non-edge.
SurvivalTerm survival_term(const Graph& g, const PartialPermutation& pp,
                           const Edge& e);

/// Pr[e is not an edge of the interval supergraph | the permutation starts
/// with pp], exact. Throws std::invalid_argument if e is an edge.
Rational cond_prob(const Graph& g, const PartialPermutation& pp, const Edge& e);

/// Sum of cond_prob over `targets`.
Rational cond_expectation(const Graph& g, const PartialPermutation& pp,
                          std::span<const Edge> targets);

struct GreedySupergraph {
  IntervalRepresentation rep;
  Permutation order;
  /// Targets that are non-edges of `rep`.
  std::vector<Edge> covered;
  /// Conditional expectation after each of the n placements, starting with
  /// the empty prefix (n + 1 values, non-decreasing, last = covered.size()).
  std::vector<Rational> expectation_chain;
};

/// Builds the permutation one vertex at a time, each time appending the
/// unplaced vertex that maximises the conditional expected number of
/// targets left uncovered (ties to the smallest index), and returns the
/// resulting interval supergraph. At least 2|targets|/(max_degree+2)
/// targets end up covered.
///
/// `targets` must be a non-empty set of non-edges.
GreedySupergraph derand_supergraph(const Graph& g,
                                   std::span<const Edge> targets);

struct DerandStats {
  /// Number of non-edges each dimension newly covered.
  std::vector<std::size_t> covered_per_dimension;
};

/// Deterministic construction: repeatedly covers the remaining non-edges
/// with `derand_supergraph` until none remain. Complete graphs give zero
/// dimensions; graphs of maximum degree <= 1 get one dimension directly.
/// The result is verified before it is returned.
BoxRepresentation build_derandomized(const Graph& g,
                                     DerandStats* stats = nullptr);

/// max_degree^2 / (2 (max_degree - 1)) * ln h, the sharper dimension
/// estimate for max_degree >= 2 and h >= 1 non-edges. Informational only.
double sharper_dimension_estimate(std::size_t max_degree, std::size_t h);

}  // namespace boxicity

#endif  // BOXICITY_DERAND_HPP
