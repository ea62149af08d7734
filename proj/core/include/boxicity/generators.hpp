#ifndef BOXICITY_GENERATORS_HPP
#define BOXICITY_GENERATORS_HPP

#include "boxicity/graph.hpp"
#include "boxicity/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace boxicity {

enum class GraphFamily { roberts, roberts_path, gnm, gnp, path, complete, empty };

std::string_view to_string(GraphFamily f);
std::optional<GraphFamily> parse_family(std::string_view tag);

/// Parameters for `generate`. Only the fields a family uses are read:
///   roberts: k       roberts-path: n, n1       gnm: n, m, seed
///   gnp: n, p, seed  path / complete / empty: n
struct GraphFamilySpec {
  GraphFamily family = GraphFamily::empty;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t n1 = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Complete graph on k vertices minus the perfect matching {(i, i + k/2)}.
/// k must be even and at least 2. The result is (k-2)-regular.
Graph roberts_graph(std::size_t k);

/// Roberts graph on 1..n1, a path n1+1 - ... - n, and the connecting edge
/// (n1, n1+1). Requires even n1 with 2 <= n1 < n.
Graph roberts_path_graph(std::size_t n, std::size_t n1);

Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);

/// Exactly m distinct edges chosen uniformly among all n(n-1)/2 pairs, by a
/// partial Fisher-Yates shuffle over pair indices (O(m) expected work).
Graph gnm_graph(std::size_t n, std::size_t m, Rng& rng);

/// Each pair independently with probability p, pairs visited in
/// lexicographic order.
Graph gnp_graph(std::size_t n, double p, Rng& rng);

/// Dispatches on spec.family; random families use Rng(spec.seed).
/// Throws std::invalid_argument on parameter violations.
Graph generate(const GraphFamilySpec& spec);

}  // namespace boxicity

#endif  // BOXICITY_GENERATORS_HPP
