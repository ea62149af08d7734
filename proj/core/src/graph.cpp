#include "boxicity/graph.hpp"

#include <algorithm>
#include <string>

namespace boxicity {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges,
             std::size_t* duplicates)
    : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " +
                                  std::to_string(e.u));
    }
    if (e.u < 1 || e.v > n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) +
                                  ") out of range 1.." + std::to_string(n));
    }
    adjacency_[e.u - 1].push_back(e.v);
    adjacency_[e.v - 1].push_back(e.u);
  }
  const std::size_t raw = edges.size();
  finalize();
  if (duplicates != nullptr) {
    *duplicates = raw - edge_count_;
  }
}

void Graph::finalize() {
  std::size_t twice = 0;
  max_degree_ = 0;
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    twice += nbrs.size();
    max_degree_ = std::max(max_degree_, nbrs.size());
  }
  edge_count_ = twice / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adjacency_[u - 1];
  const auto& b = adjacency_[v - 1];
  // search the shorter list
  if (a.size() <= b.size()) {
    return std::binary_search(a.begin(), a.end(), v);
  }
  return std::binary_search(b.begin(), b.end(), u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= order(); ++u) {
    for (const Vertex v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  const std::size_t n = order();
  out.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - edge_count_);
  for (Vertex u = 1; u <= n; ++u) {
    auto it = neighbors(u).begin();
    const auto end = neighbors(u).end();
    for (Vertex v = u + 1; v <= n; ++v) {
      while (it != end && *it < v) {
        ++it;
      }
      if (it == end || *it != v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

bool Graph::is_complete() const {
  const std::size_t n = order();
  return n < 2 || edge_count_ == n * (n - 1) / 2;
}

bool Graph::is_connected() const {
  const std::size_t n = order();
  if (n <= 1) {
    return true;
  }
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{1};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const Vertex w : neighbors(u)) {
      if (!seen[w - 1]) {
        seen[w - 1] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph complement(const Graph& g) {
  const std::vector<Edge> missing = g.non_edges();
  return Graph(g.order(), missing);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> relabel(g.order() + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.contains(keep[i])) {
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    }
    if (relabel[keep[i]] != 0) {
      throw std::invalid_argument("induced_subgraph: repeated vertex");
    }
    relabel[keep[i]] = static_cast<Vertex>(i + 1);
  }
  std::vector<Edge> edges;
  for (const Vertex u : keep) {
    for (const Vertex w : g.neighbors(u)) {
      if (u < w && relabel[w] != 0) {
        edges.emplace_back(relabel[u], relabel[w]);
      }
    }
  }
  return Graph(keep.size(), edges);
}

}  // namespace boxicity
