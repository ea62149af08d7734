#include "boxicity/rand_build.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace boxicity {

std::size_t degree_dimension_bound(std::size_t n, std::size_t max_degree) {
  if (n < 2) {
    return 1;
  }
  const double t = std::ceil(static_cast<double>(max_degree + 2) *
                             std::log(static_cast<double>(n)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(t));
}

std::size_t default_max_attempts(std::size_t n) {
  if (n < 2) {
    return 1;
  }
  const double a =
      std::ceil(std::numbers::log2e * std::log(static_cast<double>(n)));
  return std::max<std::size_t>(1, static_cast<std::size_t>(a));
}

IntervalRepresentation rand_supergraph(const Graph& g, Rng& rng) {
  return interval_supergraph(g, random_permutation(g.order(), rng));
}

Rational edge_presence_probability(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v) || u == v) {
    throw std::invalid_argument("edge_presence_probability: bad vertex pair");
  }
  if (g.has_edge(u, v)) {
    throw std::invalid_argument(
        "edge_presence_probability: (u, v) is an edge of the graph");
  }
  const auto du = static_cast<long>(g.degree(u));
  const auto dv = static_cast<long>(g.degree(v));
  return (Rational(du, du + 2) + Rational(dv, dv + 2)) / 2;
}

RandAttempt rand_attempt(const Graph& g, std::size_t t, std::uint64_t seed,
                         std::uint64_t attempt) {
  RandAttempt out;
  out.rep.n = g.order();
  out.rep.dims.reserve(t);
  // non-edges that every dimension drawn so far still covers
  std::vector<Edge> alive = g.non_edges();
  for (std::size_t j = 0; j < t; ++j) {
    Rng rng(derive_seed(seed, {attempt, j}));
    out.rep.dims.push_back(rand_supergraph(g, rng));
    const auto& d = out.rep.dims.back();
    std::erase_if(alive, [&](const Edge& e) { return !d.adjacent(e.u, e.v); });
  }
  out.misses = alive.size();
  return out;
}

AttemptsExhausted::AttemptsExhausted(std::vector<std::size_t> misses)
    : std::runtime_error("randomized build failed after " +
                         std::to_string(misses.size()) + " attempt(s)"),
      misses_(std::move(misses)) {}

RandBuildResult build_randomized(const Graph& g, const RandBuildConfig& cfg) {
  RandBuildResult result;
  result.rep.n = g.order();
  if (g.is_complete()) {
    return result;
  }
  if (cfg.direct_low_degree && g.max_degree() <= 1) {
    result.rep.dims.push_back(matching_interval_layout(g));
    result.attempts = 1;
    return result;
  }
  if (cfg.t_override && *cfg.t_override < 1) {
    throw std::invalid_argument("t override must be at least 1");
  }
  if (cfg.max_attempts && *cfg.max_attempts < 1) {
    throw std::invalid_argument("attempt cap must be at least 1");
  }
  const std::size_t t =
      cfg.t_override.value_or(degree_dimension_bound(g.order(), g.max_degree()));
  const std::size_t cap =
      cfg.max_attempts.value_or(default_max_attempts(g.order()));

  for (std::size_t a = 0; a < cap; ++a) {
    RandAttempt attempt = rand_attempt(g, t, cfg.seed, a);
    if (attempt.misses == 0) {
      if (!verify(g, attempt.rep).valid) {
        throw VerificationFailure(
            "randomized build produced an invalid representation");
      }
      result.rep = std::move(attempt.rep);
      result.attempts = a + 1;
      return result;
    }
    result.failed_misses.push_back(attempt.misses);
  }
  throw AttemptsExhausted(std::move(result.failed_misses));
}

}  // namespace boxicity
