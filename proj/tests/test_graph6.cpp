#include <doctest.h>

#include <random>

#include "dlspec/enumeration.hpp"
#include "dlspec/families.hpp"
#include "dlspec/graph6.hpp"

using dlspec::decode_graph6;
using dlspec::encode_graph6;
using dlspec::ErrorKind;
using dlspec::Graph;

TEST_CASE("hand-packed graph6 anchors") {
  CHECK(encode_graph6(dlspec::make_path(2)) == "A_");

  const Graph empty2 = decode_graph6("A?");
  CHECK(empty2.order() == 2);
  CHECK(empty2.size() == 0);

  CHECK(encode_graph6(Graph(1)) == "@");
  CHECK(decode_graph6("@").order() == 1);

  // Triangle: three upper-triangle bits set, zero padding.
  CHECK(encode_graph6(dlspec::make_cycle(3)) == "Bw");
}

TEST_CASE("round trip over random graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const Graph g(n, std::move(edges));
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("round trip over enumerated unicyclic graphs") {
  for (int n = 3; n <= 8; ++n)
    for (const auto& g6 : dlspec::enumerate_unicyclic(n).graphs) {
      const Graph g = decode_graph6(g6);
      CHECK(encode_graph6(g) == g6);
      CHECK(g.order() == n);
    }
}

TEST_CASE("malformed graph6 is rejected") {
  const auto rejects = [](const std::string& text) {
    try {
      (void)decode_graph6(text);
      return false;
    } catch (const dlspec::Error& e) {
      return e.kind() == ErrorKind::MalformedGraph6;
    }
  };
  CHECK(rejects(""));
  CHECK(rejects(">"));        // header below '?'
  CHECK(rejects("\x7f"));     // header above 'z'+? range
  CHECK(rejects("B"));        // truncated body
  CHECK(rejects("Bww"));      // oversized body
  CHECK(rejects("Bx"));       // nonzero padding bits
  CHECK(rejects("B\x20\x20"));
}

TEST_CASE("oversized graphs refuse to encode") {
  try {
    (void)encode_graph6(Graph(63));
    FAIL("expected an error");
  } catch (const dlspec::Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}
