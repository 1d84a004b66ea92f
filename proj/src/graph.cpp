#include "dlspec/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace dlspec {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) fail(ErrorKind::BadOrder, "graph order must be at least 1, got " + std::to_string(n));
  adj_.resize(n);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) fail(ErrorKind::SelfLoop, "self loop at vertex " + std::to_string(u));
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    fail(ErrorKind::EdgeExists, "duplicate edge in edge list");
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(ErrorKind::VertexOutOfRange,
         "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs(n_);
  for (int v = 0; v < n_; ++v) degs[v] = static_cast<int>(adj_[v].size());
  std::sort(degs.begin(), degs.end());
  return degs;
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u == v) fail(ErrorKind::SelfLoop, "self loop at vertex " + std::to_string(u));
  if (g.has_edge(u, v))
    fail(ErrorKind::EdgeExists,
         "edge {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return Graph(g.order(), std::move(edges));
}

Graph remove_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    fail(ErrorKind::EdgeAbsent,
         "edge {" + std::to_string(u) + "," + std::to_string(v) + "} not present");
  if (u > v) std::swap(u, v);
  std::vector<Graph::Edge> edges;
  edges.reserve(g.size() - 1);
  for (auto e : g.edges())
    if (e != Graph::Edge{u, v}) edges.push_back(e);
  return Graph(g.order(), std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    fail(ErrorKind::BadParams, "permutation length does not match graph order");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) fail(ErrorKind::BadParams, "not a permutation of 0..n-1");
    seen[p] = true;
  }
  std::vector<Graph::Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(n, std::move(edges));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == n;
}

bool is_unicyclic(const Graph& g) { return g.size() == g.order() && is_connected(g); }

}  // namespace dlspec
