#include "boxicity/oracle.hpp"

#include "boxicity/interval_map.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

namespace boxicity {

namespace {

using Mask = std::uint32_t;

void require_non_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v) || u == v) {
    throw std::invalid_argument("bad vertex pair");
  }
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("pair is an edge of the graph");
  }
}

void require_perm_size(const Graph& g, const OracleLimits& limits) {
  if (g.order() > limits.max_perm_n) {
    throw OracleLimitExceeded("permutation enumeration limited to n <= " +
                              std::to_string(limits.max_perm_n) + ", got " +
                              std::to_string(g.order()));
  }
}

// Depth-first search for a vertex order with: a before b before c and ac an
// edge imply ab an edge. A placed vertex is "closed" once a non-neighbour
// has been placed after it; no later vertex may then be adjacent to it.
class IntervalOrderSearch {
 public:
  explicit IntervalOrderSearch(std::vector<Mask> adj)
      : adj_(std::move(adj)), n_(adj_.size()) {}

  bool run() { return extend(0, 0); }

 private:
  bool extend(Mask placed, Mask closed) {
    const Mask all = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    if (placed == all) {
      return true;
    }
    const std::uint64_t key = (std::uint64_t{placed} << 32) | closed;
    if (dead_.contains(key)) {
      return false;
    }
    for (std::size_t x = 0; x < n_; ++x) {
      const Mask bit = Mask{1} << x;
      if ((placed & bit) != 0 || (closed & adj_[x]) != 0) {
        continue;
      }
      const Mask now_placed = placed | bit;
      const Mask now_closed = closed | (placed & ~adj_[x]);
      // A closed vertex with a neighbour still to come can never be fixed.
      bool viable = true;
      for (Mask c = now_closed & ~closed; c != 0; c &= c - 1) {
        const auto u = static_cast<std::size_t>(__builtin_ctz(c));
        if ((adj_[u] & ~now_placed) != 0) {
          viable = false;
          break;
        }
      }
      if (viable && extend(now_placed, now_closed)) {
        return true;
      }
    }
    dead_.insert(key);
    return false;
  }

  std::vector<Mask> adj_;
  std::size_t n_;
  std::unordered_set<std::uint64_t> dead_;
};

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u - 1] |= Mask{1} << (e.v - 1);
    adj[e.v - 1] |= Mask{1} << (e.u - 1);
  }
  return adj;
}

}  // namespace

bool is_interval_bruteforce(const Graph& g, const OracleLimits& limits) {
  if (g.order() > limits.max_box_n || g.order() > 32) {
    throw OracleLimitExceeded("interval recognition limited to n <= " +
                              std::to_string(limits.max_box_n));
  }
  return IntervalOrderSearch(adjacency_masks(g)).run();
}

int boxicity_exact(const Graph& g, const OracleLimits& limits) {
  if (g.order() > limits.max_box_n || g.order() > 32) {
    throw OracleLimitExceeded("boxicity search limited to n <= " +
                              std::to_string(limits.max_box_n) + ", got " +
                              std::to_string(g.order()));
  }
  if (g.is_complete()) {
    return 0;
  }
  const std::vector<Edge> missing = g.non_edges();
  const std::size_t h = missing.size();
  if (h > limits.max_non_edges || h > 24) {
    throw OracleLimitExceeded("boxicity search limited to " +
                              std::to_string(limits.max_non_edges) +
                              " non-edges, got " + std::to_string(h));
  }

  // Bit i of a mask set means non-edge i is added to the supergraph.
  const std::size_t count = std::size_t{1} << h;
  const std::vector<Mask> base = adjacency_masks(g);
  std::vector<Mask> interval;
  for (Mask s = 0; s < count; ++s) {
    std::vector<Mask> adj = base;
    for (std::size_t i = 0; i < h; ++i) {
      if ((s >> i) & 1U) {
        adj[missing[i].u - 1] |= Mask{1} << (missing[i].v - 1);
        adj[missing[i].v - 1] |= Mask{1} << (missing[i].u - 1);
      }
    }
    if (IntervalOrderSearch(std::move(adj)).run()) {
      interval.push_back(s);
    }
  }

  // reach[x]: some choice of k interval supergraphs has exactly the
  // non-edges in x in common. k interval graphs represent g iff 0 is
  // reachable. Repeating a supergraph is allowed, so levels only grow.
  std::vector<char> reach(count, 0);
  std::vector<Mask> frontier;
  for (const Mask s : interval) {
    reach[s] = 1;
    frontier.push_back(s);
  }
  for (int k = 1;; ++k) {
    if (reach[0]) {
      return k;
    }
    std::vector<Mask> next;
    for (const Mask a : frontier) {
      for (const Mask s : interval) {
        const Mask x = a & s;
        if (!reach[x]) {
          reach[x] = 1;
          next.push_back(x);
        }
      }
    }
    if (next.empty()) {
      throw std::logic_error("boxicity search found no representation");
    }
    // States first reached at an earlier level already had their one-step
    // extensions recorded, so only the new ones need combining.
    frontier = std::move(next);
  }
}

Rational edge_prob_exact(const Graph& g, Vertex u, Vertex v,
                         const OracleLimits& limits) {
  require_non_edge(g, u, v);
  require_perm_size(g, limits);
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{1});
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  do {
    const auto ir = interval_supergraph(g, Permutation::from_order(order));
    hits += ir.adjacent(u, v) ? 1 : 0;
    ++total;
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(static_cast<long long>(hits), static_cast<long long>(total));
}

Rational cond_prob_exact(const Graph& g, const PartialPermutation& pp,
                         const Edge& e, const OracleLimits& limits) {
  require_non_edge(g, e.u, e.v);
  const auto missing = g.non_edges();
  const auto it = std::lower_bound(missing.begin(), missing.end(), e);
  return cond_prob_exact_all(g, pp, limits)[it - missing.begin()];
}

std::vector<Rational> cond_prob_exact_all(const Graph& g,
                                          const PartialPermutation& pp,
                                          const OracleLimits& limits) {
  require_perm_size(g, limits);
  if (pp.order_of_graph() != g.order()) {
    throw std::invalid_argument("prefix belongs to a different graph");
  }
  const std::vector<Edge> missing = g.non_edges();
  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!pp.is_placed(v)) {
      rest.push_back(v);
    }
  }
  std::vector<std::uint64_t> survive(missing.size(), 0);
  std::uint64_t total = 0;
  do {
    std::vector<Vertex> order(pp.placed().begin(), pp.placed().end());
    order.insert(order.end(), rest.begin(), rest.end());
    const auto ir = interval_supergraph(g, Permutation::from_order(order));
    for (std::size_t i = 0; i < missing.size(); ++i) {
      survive[i] += ir.adjacent(missing[i].u, missing[i].v) ? 0 : 1;
    }
    ++total;
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::vector<Rational> out;
  out.reserve(missing.size());
  for (const std::uint64_t s : survive) {
    out.emplace_back(static_cast<long long>(s), static_cast<long long>(total));
  }
  return out;
}

}  // namespace boxicity
