#ifndef BOXICITY_BOX_REPRESENTATION_HPP
#define BOXICITY_BOX_REPRESENTATION_HPP

#include "boxicity/graph.hpp"
#include "boxicity/interval_map.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxicity {

/// Ordered list of interval graphs on a common vertex set 1..n. Dimension j
/// gives every vertex its j-th side, so each vertex owns an axis-parallel box
/// and two boxes meet iff their intervals meet in every dimension.
///
/// It represents G when the edge sets of the interval graphs intersect to
/// exactly E(G). With no dimensions every pair is adjacent, which is how the
/// complete graph is encoded.
struct BoxRepresentation {
  std::size_t n = 0;
  std::vector<IntervalRepresentation> dims;

  std::size_t dimension() const { return dims.size(); }

  /// True iff u and v meet in every dimension.
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const BoxRepresentation&,
                         const BoxRepresentation&) = default;
};

/// A builder produced a representation that fails verification. Indicates
/// a defect in the builder, never bad input.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MissingEdge {
  Edge edge;
  std::size_t dim = 0;  // 1-based dimension that separates the edge

  friend bool operator==(const MissingEdge&, const MissingEdge&) = default;
};

struct VerifyReport {
  bool valid = false;
  std::size_t dimension = 0;
  /// Edges of G whose intervals are disjoint in some dimension.
  std::vector<MissingEdge> missing_edges;
  /// Non-edges of G whose intervals meet in every dimension.
  std::vector<Edge> extra_edges;
};

/// Exact comparison of the intersection of all dimensions with E(g).
/// O(t * n^2). Throws std::invalid_argument if the vertex counts differ.
VerifyReport verify(const Graph& g, const BoxRepresentation& rep);

/// Like `verify` but ignores every pair that touches a vertex in `skip`.
/// Used to check a representation of G minus some vertices while they still
/// occupy slots in the representation.
VerifyReport verify_without(const Graph& g, const BoxRepresentation& rep,
                            std::span<const Vertex> skip);

/// Extends a representation that is valid for G - v to one valid for G.
///
/// v's interval in each existing dimension is widened to cover every other
/// interval there, and one dimension is appended in which v = [0,0], each
/// neighbour = [0,1] and every other vertex = [1,2]. If v == rep.n + 1 the
/// vertex set grows by one; otherwise v's current intervals are ignored.
/// Throws std::invalid_argument on malformed input.
BoxRepresentation add_vertex_dimension(const BoxRepresentation& rep, Vertex v,
                                       std::span<const Vertex> nbrs);

/// Checked form: verifies `rep` against g - v first and throws
/// std::invalid_argument if it does not represent it.
BoxRepresentation add_vertex_dimension(const Graph& g,
                                       const BoxRepresentation& rep, Vertex v);

/// One-dimensional representation of a graph with maximum degree <= 1:
/// matched pairs are placed next to each other in an interval supergraph
/// order. Throws std::invalid_argument if the maximum degree exceeds 1.
IntervalRepresentation matching_interval_layout(const Graph& g);

/// Text form:
///
///   boxrep <n> <t>
///   dim <j>            (j = 1..t, each followed by n lines)
///   <v> <l> <r>        (v ascending)
///
/// LF line ends. The result of serialize is canonical: deserialize then
/// serialize returns the same bytes.
std::string serialize(const BoxRepresentation& rep);
/// Throws ParseError (see graph_io.hpp) with the offending line.
BoxRepresentation deserialize(std::string_view text);

}  // namespace boxicity

#endif  // BOXICITY_BOX_REPRESENTATION_HPP
