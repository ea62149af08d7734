#include "boxicity/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace boxicity {

std::string_view to_string(GraphFamily f) {
  switch (f) {
    case GraphFamily::roberts: return "roberts";
    case GraphFamily::roberts_path: return "roberts-path";
    case GraphFamily::gnm: return "gnm";
    case GraphFamily::gnp: return "gnp";
    case GraphFamily::path: return "path";
    case GraphFamily::complete: return "complete";
    case GraphFamily::empty: return "empty";
  }
  return "?";
}

std::optional<GraphFamily> parse_family(std::string_view tag) {
  for (const auto f : {GraphFamily::roberts, GraphFamily::roberts_path,
                       GraphFamily::gnm, GraphFamily::gnp, GraphFamily::path,
                       GraphFamily::complete, GraphFamily::empty}) {
    if (to_string(f) == tag) {
      return f;
    }
  }
  return std::nullopt;
}

namespace {

void add_roberts_edges(std::size_t k, std::vector<Edge>& edges) {
  const std::size_t half = k / 2;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) {
      if (i <= half && j == i + half) {
        continue;  // matching edge
      }
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
}

// Index -> (u, v) for the lexicographic enumeration of pairs u < v in 1..n.
Edge pair_from_index(std::size_t n, std::uint64_t idx) {
  // pairs preceding row u: (u-1)(2n-u)/2
  const auto before = [n](std::uint64_t u) {
    return (u - 1) * (2 * static_cast<std::uint64_t>(n) - u) / 2;
  };
  const double nn = static_cast<double>(n);
  const double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(idx);
  auto u = static_cast<std::uint64_t>(
      std::floor(((2 * nn - 1) - std::sqrt(std::max(disc, 0.0))) / 2.0)) + 1;
  u = std::clamp<std::uint64_t>(u, 1, n - 1);
  while (u > 1 && before(u) > idx) {
    --u;
  }
  while (u < n - 1 && before(u + 1) <= idx) {
    ++u;
  }
  return Edge(static_cast<Vertex>(u),
              static_cast<Vertex>(u + 1 + (idx - before(u))));
}

}  // namespace

Graph roberts_graph(std::size_t k) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument("roberts graph needs an even k >= 2, got " +
                                std::to_string(k));
  }
  std::vector<Edge> edges;
  add_roberts_edges(k, edges);
  return Graph(k, edges);
}

Graph roberts_path_graph(std::size_t n, std::size_t n1) {
  if (n1 < 2 || n1 % 2 != 0 || n1 >= n) {
    throw std::invalid_argument(
        "roberts-path needs an even n1 with 2 <= n1 < n");
  }
  std::vector<Edge> edges;
  add_roberts_edges(n1, edges);
  for (std::size_t v = n1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph(n, edges);
}

Graph gnm_graph(std::size_t n, std::size_t m, Rng& rng) {
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs) {
    throw std::invalid_argument("gnm: m = " + std::to_string(m) +
                                " exceeds n(n-1)/2 = " + std::to_string(pairs));
  }
  // Sparse partial Fisher-Yates: only displaced slots are stored.
  std::unordered_map<std::uint64_t, std::uint64_t> displaced;
  auto slot = [&](std::uint64_t i) {
    const auto it = displaced.find(i);
    return it == displaced.end() ? i : it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const std::uint64_t j = i + rng.below(pairs - i);
    const std::uint64_t chosen = slot(j);
    displaced[j] = slot(i);
    edges.push_back(pair_from_index(n, chosen));
  }
  return Graph(n, edges);
}

Graph gnp_graph(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gnp: p must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      if (rng.unit() < p) {
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return Graph(n, edges);
}

Graph generate(const GraphFamilySpec& spec) {
  switch (spec.family) {
    case GraphFamily::roberts:
      return roberts_graph(spec.k);
    case GraphFamily::roberts_path:
      return roberts_path_graph(spec.n, spec.n1);
    case GraphFamily::gnm: {
      Rng rng(spec.seed);
      return gnm_graph(spec.n, spec.m, rng);
    }
    case GraphFamily::gnp: {
      Rng rng(spec.seed);
      return gnp_graph(spec.n, spec.p, rng);
    }
    case GraphFamily::path:
      return path_graph(spec.n);
    case GraphFamily::complete:
      return complete_graph(spec.n);
    case GraphFamily::empty:
      return Graph(spec.n);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace boxicity
