#include "boxicity/split_build.hpp"

#include "boxicity/derand.hpp"

#include <cmath>
#include <stdexcept>

namespace boxicity {

std::size_t split_dimension_bound(std::size_t m, std::size_t n) {
  if (n < 2) {
    return 0;
  }
  return static_cast<std::size_t>(
      std::ceil(5.0 * std::sqrt(static_cast<double>(m) *
                                std::log(static_cast<double>(n)))));
}

bool is_high_degree(std::size_t degree, std::size_t m, std::size_t n) {
  const double d = static_cast<double>(degree);
  return d * d * std::log(static_cast<double>(n)) + 1e-9 >=
         static_cast<double>(m);
}

SplitBuildResult build_split(const Graph& g, const RandBuildConfig& cfg,
                             BuildMethod method) {
  if (g.size() == 0) {
    throw std::invalid_argument("split build needs at least one edge");
  }
  const std::size_t n = g.order();
  const std::size_t m = g.size();

  SplitBuildResult result;
  result.connected = g.is_connected();

  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= n; ++v) {
    if (is_high_degree(g.degree(v), m, n)) {
      result.high_degree.push_back(v);
    } else {
      rest.push_back(v);
    }
  }

  const Graph core = induced_subgraph(g, rest);
  BoxRepresentation core_rep;
  if (method == BuildMethod::derandomized) {
    core_rep = build_derandomized(core);
  } else {
    core_rep = build_randomized(core, cfg).rep;
  }
  result.core_dimension = core_rep.dimension();

  // Lift to the full vertex set; set-aside vertices hold placeholders until
  // add_vertex_dimension overwrites them.
  BoxRepresentation rep;
  rep.n = n;
  for (const auto& d : core_rep.dims) {
    std::vector<Interval> ivs(n, Interval{0, 0});
    for (std::size_t i = 0; i < rest.size(); ++i) {
      ivs[rest[i] - 1] = d[static_cast<Vertex>(i + 1)];
    }
    rep.dims.emplace_back(std::move(ivs));
  }
  for (const Vertex v : result.high_degree) {
    rep = add_vertex_dimension(rep, v, g.neighbors(v));
  }

  if (!verify(g, rep).valid) {
    throw VerificationFailure("split build produced an invalid representation");
  }
  result.rep = std::move(rep);
  return result;
}

}  // namespace boxicity
