#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "dlspec/graph.hpp"

namespace dlspec {

// Names the special vertices of a constructed family member, e.g. "u1",
// "w3". Role names are unique; one vertex may carry several roles.
class VertexRoleMap {
 public:
  void assign(const std::string& role, int vertex);
  int at(const std::string& role) const;
  bool contains(const std::string& role) const { return roles_.count(role) > 0; }
  const std::map<std::string, int>& roles() const { return roles_; }

 private:
  std::map<std::string, int> roles_;
};

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);

// Kite Ki_{n,3}: triangle {u1,u2,v2} with the pendant path v1,w1,...,w_{n-4}
// hanging off u1. Vertex numbering u1=0, u2=1, v2=2, v1=3, w1=4, ...,
// w_{n-4}=n-1. n=3 is the bare triangle; the roles "pendant" and "cycle2"
// name the path's far end and a degree-2 triangle vertex.
std::pair<Graph, VertexRoleMap> make_kite(int n);

// The tree H_n: path w1,...,w_{n-4} with two short twigs u1-u2 and v1-v2
// both rooted at w1. Vertex numbering w1=0, ..., w_{n-4}=n-5, u1=n-4,
// u2=n-3, v1=n-2, v2=n-1.
std::pair<Graph, VertexRoleMap> make_h_graph(int n);

// 4-cycle w1,w2,w3,w4 with a pendant path of length l_i at w_i. Path
// vertices take roles u*, v*, z*, y* for slots 1..4 and are numbered 4..n-1
// in slot order.
std::pair<Graph, VertexRoleMap> make_c4_spider(int l1, int l2, int l3, int l4);

// G_u(k,l): two fresh pendant paths of k and l new vertices rooted at u.
// New vertices are numbered n..n+k-1 (first path, outward) then
// n+k..n+k+l-1 (second path, outward).
Graph attach_two_paths(const Graph& g, int u, int k, int l);

// G_{u,v}(k,l): a fresh pendant path of k new vertices at u and one of l
// new vertices at v; both anchors must have degree at least 2.
Graph attach_at_two_vertices(const Graph& g, int u, int v, int k, int l);

enum class FamilyKind { Path, Cycle, Kite, HGraph, C4Spider, TwoPathAttach, TwoVertexAttach };

// Text form: path:n=4, cycle:n=5, kite:n=7, h:n=8, c4spider:2,1,0,0,
// twopath:k=2,l=1 (two paths at one triangle vertex), twovertex:base=c3,k=2,l=1
// (paths at two adjacent base vertices; base c3 or k4).
struct FamilySpec {
  FamilyKind kind = FamilyKind::Cycle;
  int n = 0;
  std::array<int, 4> legs{0, 0, 0, 0};
  int k = 0;
  int l = 0;
  std::string base = "c3";

  static FamilySpec parse(const std::string& text);
  std::string text() const;
  int order() const;
  std::pair<Graph, VertexRoleMap> build() const;
};

}  // namespace dlspec
