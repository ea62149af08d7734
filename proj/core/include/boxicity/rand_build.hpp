#ifndef BOXICITY_RAND_BUILD_HPP
#define BOXICITY_RAND_BUILD_HPP

#include "boxicity/box_representation.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/interval_map.hpp"
#include "boxicity/rational.hpp"
#include "boxicity/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace boxicity {

/// ceil((max_degree + 2) * ln n), at least 1. Natural log in double precision.
std::size_t degree_dimension_bound(std::size_t n, std::size_t max_degree);

/// ceil(log2(e) * ln n), at least 1.
std::size_t default_max_attempts(std::size_t n);

struct RandBuildConfig {
  std::optional<std::size_t> t_override;
  std::optional<std::size_t> max_attempts;
  std::uint64_t seed = 0;
  /// Graphs with maximum degree <= 1 get the direct one-dimensional layout
  /// instead of random interval supergraphs.
  bool direct_low_degree = false;
};

/// One draw of the random interval supergraph: a uniform permutation pushed
/// through `interval_supergraph`. O(n + m).
IntervalRepresentation rand_supergraph(const Graph& g, Rng& rng);

/// Probability that the non-edge (u, v) becomes an edge of a random interval
/// supergraph: (d(u)/(d(u)+2) + d(v)/(d(v)+2)) / 2.
/// Throws std::invalid_argument if (u, v) is an edge or u == v.
Rational edge_presence_probability(const Graph& g, Vertex u, Vertex v);

/// One set of t random interval supergraphs.
struct RandAttempt {
  BoxRepresentation rep;
  /// Non-edges still present in all t dimensions; zero means success.
  std::size_t misses = 0;
};

/// Attempt `attempt` of a build seeded with `seed`. Dimension j draws from
/// the substream (seed, attempt, j), so attempts are independent of each
/// other and of evaluation order.
RandAttempt rand_attempt(const Graph& g, std::size_t t, std::uint64_t seed,
                         std::uint64_t attempt);

class AttemptsExhausted : public std::runtime_error {
 public:
  explicit AttemptsExhausted(std::vector<std::size_t> misses);
  /// Uncovered non-edge count of each failed attempt, in attempt order.
  const std::vector<std::size_t>& misses() const { return misses_; }

 private:
  std::vector<std::size_t> misses_;
};

struct RandBuildResult {
  BoxRepresentation rep;
  std::size_t attempts = 0;
  /// Miss counts of the failed attempts that preceded the successful one.
  std::vector<std::size_t> failed_misses;
};

/// Repeats `rand_attempt` until one represents g exactly, up to the attempt
/// cap. Complete graphs return the zero-dimensional representation. The
/// result is verified before it is returned.
/// Throws AttemptsExhausted when every attempt fails.
RandBuildResult build_randomized(const Graph& g, const RandBuildConfig& cfg);

}  // namespace boxicity

#endif  // BOXICITY_RAND_BUILD_HPP
