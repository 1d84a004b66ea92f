#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "dlspec/canonical.hpp"
#include "dlspec/enumeration.hpp"
#include "dlspec/error.hpp"
#include "dlspec/families.hpp"
#include "dlspec/graph.hpp"
#include "dlspec/graph6.hpp"
#include "oracles.hpp"

using dlspec::ErrorKind;
using dlspec::Graph;

namespace {

bool kind_is(const dlspec::Error& e, ErrorKind kind) { return e.kind() == kind; }

#define CHECK_KIND(expr, kind)                     \
  do {                                             \
    try {                                          \
      (void)(expr);                                \
      FAIL("expected an error");                   \
    } catch (const dlspec::Error& e) {             \
      CHECK_MESSAGE(kind_is(e, kind), e.what());   \
    }                                              \
  } while (0)

std::set<std::string> cert_set(const std::vector<Graph>& graphs) {
  std::set<std::string> certs;
  for (const auto& g : graphs) certs.insert(dlspec::canonical_form(g).bytes);
  return certs;
}

}  // namespace

TEST_CASE("unicyclic enumeration matches the edge-subset oracle") {
  for (int n = 3; n <= 6; ++n) {
    const auto report = dlspec::enumerate_unicyclic(n);
    const auto oracle = cert_set(oracles::brute_force_unicyclic(n));
    CHECK(report.n == n);
    CHECK(report.count == report.graphs.size());
    CHECK(report.count == oracle.size());
    CHECK(std::set<std::string>(report.graphs.begin(), report.graphs.end()) == oracle);
  }
}

TEST_CASE("unicyclic class counts") {
  const std::size_t want[] = {1, 2, 5, 13, 33, 89, 240, 657};
  for (int n = 3; n <= 10; ++n) CHECK(dlspec::enumerate_unicyclic(n).count == want[n - 3]);
}

TEST_CASE("every tree plus one edge is enumerated") {
  // Deleting a cycle edge of a unicyclic graph leaves a spanning tree, so
  // decorating every tree with every absent edge reaches every class.
  const int n = 6;
  std::set<std::string> reached;
  std::vector<int> code(n - 2, 0);
  while (true) {
    const Graph tree = dlspec::prufer_to_tree(code);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!tree.has_edge(u, v))
          reached.insert(dlspec::canonical_form(dlspec::add_edge(tree, u, v)).bytes);
    int pos = n - 3;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
  const auto report = dlspec::enumerate_unicyclic(n);
  CHECK(reached == std::set<std::string>(report.graphs.begin(), report.graphs.end()));
}

TEST_CASE("shard count does not change the output") {
  const auto one = dlspec::partitioned_enumerate(8, 1);
  for (int shards : {2, 3, 4, 7}) {
    const auto many = dlspec::partitioned_enumerate(8, shards);
    CHECK(many.graphs == one.graphs);
  }
  CHECK(one.graphs == dlspec::enumerate_unicyclic(8).graphs);
}

TEST_CASE("emitted graphs are canonical, sorted, and unicyclic") {
  for (int n : {5, 7, 9}) {
    const auto report = dlspec::enumerate_unicyclic(n);
    CHECK(std::is_sorted(report.graphs.begin(), report.graphs.end()));
    CHECK(std::adjacent_find(report.graphs.begin(), report.graphs.end()) ==
          report.graphs.end());
    for (const auto& s : report.graphs) {
      const Graph g = dlspec::decode_graph6(s);
      CHECK(g.order() == n);
      CHECK(dlspec::is_unicyclic(g));
      CHECK(dlspec::canonical_form(g).bytes == s);
    }
  }
}

TEST_CASE("enumeration is deterministic across runs") {
  CHECK(dlspec::enumerate_unicyclic(7).graphs == dlspec::enumerate_unicyclic(7).graphs);
  CHECK(dlspec::enumerate_unicyclic(7).elapsed_seconds >= 0.0);
}

TEST_CASE("enumeration bounds") {
  CHECK_KIND(dlspec::enumerate_unicyclic(2), ErrorKind::TooLarge);
  CHECK_KIND(dlspec::enumerate_unicyclic(13), ErrorKind::TooLarge);
  CHECK_KIND(dlspec::enumerate_unicyclic(17, 99), ErrorKind::TooLarge);  // ceiling caps at 16
  CHECK_KIND(dlspec::enumerate_unicyclic(6, 5), ErrorKind::TooLarge);
  CHECK_KIND(dlspec::partitioned_enumerate(6, 0), ErrorKind::BadParams);
  CHECK(dlspec::enumerate_unicyclic(5, 5).count == 5);
  CHECK(dlspec::enumerate_unicyclic(11).count == 1806);
}

TEST_CASE("prufer decoding") {
  CHECK(dlspec::prufer_to_tree({}) == dlspec::make_path(2));
  CHECK(dlspec::prufer_to_tree({0}) == Graph(3, {{0, 1}, {0, 2}}));
  CHECK(dlspec::prufer_to_tree({3, 3, 3}) ==
        Graph(5, {{0, 3}, {1, 3}, {2, 3}, {3, 4}}));
  CHECK(dlspec::prufer_to_tree({1, 2}) == dlspec::make_path(4));

  // Codes of length 3 cover exactly the three tree shapes on 5 vertices.
  std::set<std::string> shapes;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        const Graph t = dlspec::prufer_to_tree({a, b, c});
        CHECK(t.order() == 5);
        CHECK(t.size() == 4);
        CHECK(dlspec::is_connected(t));
        shapes.insert(dlspec::canonical_form(t).bytes);
      }
  CHECK(shapes.size() == 3);

  CHECK_KIND(dlspec::prufer_to_tree({5}), ErrorKind::BadParams);
}

TEST_CASE("connected graph census") {
  const std::size_t want[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = dlspec::connected_graphs_up_to_iso(n);
    CHECK(graphs.size() == want[n - 1]);
    CHECK(std::is_sorted(graphs.begin(), graphs.end()));
    for (const auto& s : graphs) CHECK(dlspec::is_connected(dlspec::decode_graph6(s)));
  }
  CHECK_KIND(dlspec::connected_graphs_up_to_iso(8), ErrorKind::TooLarge);
}
