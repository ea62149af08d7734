#ifndef BOXICITY_SPLIT_BUILD_HPP
#define BOXICITY_SPLIT_BUILD_HPP

#include "boxicity/box_representation.hpp"
#include "boxicity/graph.hpp"
#include "boxicity/rand_build.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace boxicity {

enum class BuildMethod { randomized, derandomized };

/// ceil(5 * sqrt(m ln n)).
std::size_t split_dimension_bound(std::size_t m, std::size_t n);

/// Whether a vertex of this degree is set aside, i.e. degree >= sqrt(m/ln n).
/// Decided as degree^2 * ln n >= m with an absolute slack of 1e-9.
bool is_high_degree(std::size_t degree, std::size_t m, std::size_t n);

struct SplitBuildResult {
  BoxRepresentation rep;
  /// Vertices with degree >= sqrt(m/ln n), ascending; each adds one dimension.
  std::vector<Vertex> high_degree;
  /// Dimension of the representation of the remaining induced subgraph.
  std::size_t core_dimension = 0;
  /// False when the input is disconnected; the 5 sqrt(m ln n) bound is then
  /// not guaranteed.
  bool connected = true;
};

/// Sets aside the high-degree vertices, represents the induced subgraph on
/// the rest with `method`, then adds the set-aside vertices back one at a
/// time with `add_vertex_dimension` in ascending order. Verified before
/// returning. Requires at least one edge.
SplitBuildResult build_split(const Graph& g, const RandBuildConfig& cfg,
                             BuildMethod method);

}  // namespace boxicity

#endif  // BOXICITY_SPLIT_BUILD_HPP
