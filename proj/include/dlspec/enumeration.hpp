#pragma once

#include <string>
#include <vector>

#include "dlspec/canonical.hpp"
#include "dlspec/graph.hpp"

namespace dlspec {

struct EnumerationReport {
  int n = 0;
  std::size_t count = 0;
  std::vector<std::string> graphs;  // canonical graph6, sorted ascending
  double elapsed_seconds = 0.0;
};

// All connected unicyclic graphs of order n, one canonical representative
// per isomorphism class. Cycle length g runs over 3..n; each cycle vertex
// carries a rooted tree, and tuples of rooted-tree classes are kept only
// when minimal under the dihedral symmetry of the cycle.
EnumerationReport enumerate_unicyclic(int n, int ceiling = kDefaultCeiling);

// Same output for every shard count; shards split the (cycle length,
// first tree) space and may run concurrently.
EnumerationReport partitioned_enumerate(int n, int shards, int ceiling = kDefaultCeiling);

// All connected graphs of order n up to isomorphism, by brute force over
// edge subsets; n <= 7.
std::vector<std::string> connected_graphs_up_to_iso(int n);

// Tree on code.size()+2 vertices decoded from a Pruefer sequence.
Graph prufer_to_tree(const std::vector<int>& code);

}  // namespace dlspec
