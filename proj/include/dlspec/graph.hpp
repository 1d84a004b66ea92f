#pragma once

#include <utility>
#include <vector>

#include "dlspec/error.hpp"

namespace dlspec {

// Simple undirected graph on vertices 0..n-1. Instances are immutable;
// editing operations are free functions that return a new graph.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  explicit Graph(int n, std::vector<Edge> edges = {});

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  // Edges normalized to u < v and sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const;

  int degree(int v) const;
  bool has_edge(int u, int v) const;

  // Non-decreasing.
  std::vector<int> degree_sequence() const;

  // Equality of labeled graphs, not isomorphism.
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);

// Vertex v of g becomes perm[v] in the result; perm must be a permutation
// of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);

// Connected with exactly one cycle, i.e. connected and |E| == |V|.
bool is_unicyclic(const Graph& g);

}  // namespace dlspec
