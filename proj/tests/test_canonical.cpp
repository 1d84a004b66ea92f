#include <doctest.h>

#include <numeric>
#include <random>

#include "dlspec/canonical.hpp"
#include "dlspec/families.hpp"
#include "dlspec/graph6.hpp"
#include "oracles.hpp"

using dlspec::are_isomorphic;
using dlspec::canonical_form;
using dlspec::Graph;

TEST_CASE("certificates are invariant under relabeling") {
  const Graph a = dlspec::make_cycle(4);
  const Graph b(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});  // same cycle, relabeled
  CHECK(canonical_form(a) == canonical_form(b));

  const Graph p4 = dlspec::make_path(4);
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(canonical_form(p4) != canonical_form(star));
}

TEST_CASE("all relabelings of the 4-kite share one certificate") {
  const Graph kite = dlspec::make_kite(4).first;
  const auto cert = canonical_form(kite);
  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    CHECK(canonical_form(dlspec::relabel(kite, perm)) == cert);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("certificate equals the exact minimum over all orderings") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    const Graph g(n, std::move(edges));
    CHECK(canonical_form(g).bytes == oracles::min_graph6_all_orders(g));
  }
  // A few structured shapes where pruning is busiest.
  for (const Graph& g : {dlspec::make_cycle(7), dlspec::make_kite(7).first,
                         dlspec::make_complete(6), dlspec::make_c4_spider(1, 1, 1, 0).first}) {
    CHECK(canonical_form(g).bytes == oracles::min_graph6_all_orders(g));
  }
}

TEST_CASE("random relabelings keep the certificate") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const Graph g(n, std::move(edges));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(dlspec::relabel(g, perm)));
  }
}

TEST_CASE("canonical_relabel is a fixed point") {
  const Graph g = dlspec::make_c4_spider(2, 0, 1, 0).first;
  const Graph canon = dlspec::canonical_relabel(g);
  CHECK(dlspec::encode_graph6(canon) == canonical_form(g).bytes);
  CHECK(canonical_form(canon).bytes == canonical_form(g).bytes);
}

TEST_CASE("isomorphism checks") {
  const Graph c5 = dlspec::make_cycle(5);
  CHECK(are_isomorphic(c5, dlspec::relabel(c5, {3, 1, 4, 0, 2})));
  CHECK(are_isomorphic(dlspec::make_c4_spider(1, 0, 0, 0).first,
                       dlspec::make_c4_spider(0, 1, 0, 0).first));
  CHECK(!are_isomorphic(dlspec::make_kite(6).first, dlspec::make_h_graph(6).first));
  CHECK(!are_isomorphic(c5, dlspec::make_cycle(4)));

  // Same degree sequence, different graphs: C_6 vs two triangles is caught
  // only by the certificate, not the fast rejections.
  const Graph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(!are_isomorphic(dlspec::make_cycle(6), two_triangles));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<Graph::Edge> ea, eb;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) ea.emplace_back(u, v);
        if (rng() % 2) eb.emplace_back(u, v);
      }
    const Graph a(n, std::move(ea)), b(n, std::move(eb));
    CHECK(are_isomorphic(a, b) == oracles::isomorphic_by_permutation(a, b));
  }
}

TEST_CASE("ceiling is enforced") {
  const auto too_large = [](int n, int ceiling) {
    try {
      (void)canonical_form(Graph(n), ceiling);
      return false;
    } catch (const dlspec::Error& e) {
      return e.kind() == dlspec::ErrorKind::TooLarge;
    }
  };
  CHECK(too_large(13, dlspec::kDefaultCeiling));
  CHECK(!too_large(12, dlspec::kDefaultCeiling));
  CHECK(too_large(17, 99));  // requested ceiling clamps to 16
  CHECK(too_large(6, 5));
}
