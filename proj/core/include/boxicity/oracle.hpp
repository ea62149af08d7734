#ifndef BOXICITY_ORACLE_HPP
#define BOXICITY_ORACLE_HPP

// Brute-force ground truth for small graphs. Everything here enumerates;
// nothing reuses the case analysis or the closed forms it is meant to check.

#include "boxicity/derand.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace boxicity {

struct OracleLimits {
  /// Largest n for permutation enumeration.
  std::size_t max_perm_n = 7;
  /// Largest number of non-edges for the boxicity search.
  std::size_t max_non_edges = 12;
  /// Largest n for the boxicity search.
  std::size_t max_box_n = 8;
};

class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interval recognition through the ordering characterisation: g is an
/// interval graph iff some vertex order has, for positions a < b < c,
/// ac in E => ab in E. Searches orders with pruning. n <= max_box_n.
bool is_interval_bruteforce(const Graph& g, const OracleLimits& limits = {});

/// Smallest k such that k interval supergraphs of g intersect to exactly
/// E(g); 0 for complete graphs.
int boxicity_exact(const Graph& g, const OracleLimits& limits = {});

/// Fraction of all n! permutations whose interval supergraph contains the
/// non-edge (u, v).
Rational edge_prob_exact(const Graph& g, Vertex u, Vertex v,
                         const OracleLimits& limits = {});

/// Fraction of the completions of `pp` whose interval supergraph does not
/// contain the non-edge e.
Rational cond_prob_exact(const Graph& g, const PartialPermutation& pp,
                         const Edge& e, const OracleLimits& limits = {});

/// cond_prob_exact for every non-edge of g at once (in non_edges() order),
/// sharing one pass over the completions.
std::vector<Rational> cond_prob_exact_all(const Graph& g,
                                          const PartialPermutation& pp,
                                          const OracleLimits& limits = {});

}  // namespace boxicity

#endif  // BOXICITY_ORACLE_HPP
