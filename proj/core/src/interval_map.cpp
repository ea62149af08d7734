#include "boxicity/interval_map.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace boxicity {

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  return from_order(std::move(order));
}

Permutation Permutation::from_order(std::vector<Vertex> order) {
  Permutation p;
  p.rank_.assign(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 1 || v > order.size() || p.rank_[v - 1] != 0) {
      throw std::invalid_argument("permutation: order is not a bijection");
    }
    p.rank_[v - 1] = i + 1;
  }
  p.order_ = std::move(order);
  return p;
}

Permutation Permutation::from_ranks(const std::vector<std::size_t>& ranks) {
  std::vector<Vertex> order(ranks.size(), 0);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const std::size_t r = ranks[i];
    if (r < 1 || r > ranks.size() || order[r - 1] != 0) {
      throw std::invalid_argument("permutation: ranks are not a bijection");
    }
    order[r - 1] = static_cast<Vertex>(i + 1);
  }
  Permutation p;
  p.order_ = std::move(order);
  p.rank_ = ranks;
  return p;
}

std::vector<std::size_t> project(const Permutation& pi,
                                 std::span<const Vertex> subset) {
  std::vector<std::size_t> idx(subset.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (const Vertex v : subset) {
    if (v < 1 || v > pi.size()) {
      throw std::invalid_argument("project: vertex out of range");
    }
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pi.rank(subset[a]) < pi.rank(subset[b]);
  });
  std::vector<std::size_t> out(subset.size());
  for (std::size_t pos = 0; pos < idx.size(); ++pos) {
    if (pos > 0 && subset[idx[pos]] == subset[idx[pos - 1]]) {
      throw std::invalid_argument("project: repeated vertex");
    }
    out[idx[pos]] = pos + 1;
  }
  return out;
}

IntervalRepresentation::IntervalRepresentation(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (const Interval& iv : intervals_) {
    if (iv.lo > iv.hi) {
      throw std::invalid_argument("interval with left end above right end");
    }
  }
}

IntervalRepresentation interval_supergraph(const Graph& g,
                                           const Permutation& pi) {
  const std::size_t n = g.order();
  if (pi.size() != n) {
    throw std::invalid_argument("permutation size differs from graph order");
  }
  // Walk ranks left to right; the first time a vertex or one of its
  // neighbours appears fixes its left end.
  std::vector<Interval> out(n);
  std::vector<char> left_set(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vertex u = pi.at(i);
    const auto r = static_cast<std::int64_t>(i);
    out[u - 1].hi = r;
    if (!left_set[u - 1]) {
      out[u - 1].lo = r;
      left_set[u - 1] = 1;
    }
    for (const Vertex w : g.neighbors(u)) {
      if (!left_set[w - 1]) {
        out[w - 1].lo = r;
        left_set[w - 1] = 1;
      }
    }
  }
  return IntervalRepresentation(std::move(out));
}

std::vector<Edge> interval_edges(const IntervalRepresentation& ir) {
  const std::size_t n = ir.order();
  // (coordinate, 0 = open / 1 = close, vertex); opens sort first so touching
  // closed intervals meet.
  std::vector<std::tuple<std::int64_t, int, Vertex>> events;
  events.reserve(2 * n);
  for (Vertex v = 1; v <= n; ++v) {
    events.emplace_back(ir[v].lo, 0, v);
    events.emplace_back(ir[v].hi, 1, v);
  }
  std::sort(events.begin(), events.end());

  std::vector<Vertex> active;
  std::vector<std::size_t> slot(n + 1, 0);
  std::vector<Edge> edges;
  for (const auto& [x, kind, v] : events) {
    if (kind == 0) {
      for (const Vertex w : active) {
        edges.emplace_back(v, w);
      }
      slot[v] = active.size();
      active.push_back(v);
    } else {
      const Vertex last = active.back();
      active[slot[v]] = last;
      slot[last] = slot[v];
      active.pop_back();
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Edge> interval_edges_pairwise(const IntervalRepresentation& ir) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= ir.order(); ++u) {
    for (Vertex v = u + 1; v <= ir.order(); ++v) {
      if (ir.adjacent(u, v)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return edges;
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(order[i - 1], order[j]);
  }
  return Permutation::from_order(std::move(order));
}

}  // namespace boxicity
