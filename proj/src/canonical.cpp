#include "dlspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>

#include "dlspec/graph6.hpp"

namespace dlspec {

namespace {

// Upper-triangle adjacency bits of a partial vertex ordering, packed
// MSB-first so word comparison is lexicographic bit comparison.
struct Bits {
  std::array<std::uint64_t, 2> w{0, 0};
  int len = 0;

  void push(bool bit) {
    if (bit) w[len >> 6] |= std::uint64_t{1} << (63 - (len & 63));
    ++len;
  }
};

// Compares the first cur.len bits of cur against best. <0, 0, >0.
int cmp_prefix(const Bits& cur, const Bits& best) {
  if (cur.len == 0) return 0;
  const int last_word = (cur.len - 1) >> 6;
  for (int k = 0; k <= last_word; ++k) {
    const int used = std::min(64, cur.len - 64 * k);
    const std::uint64_t mask = used == 64 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - used);
    const std::uint64_t a = cur.w[k] & mask;
    const std::uint64_t b = best.w[k] & mask;
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

struct CanonSearch {
  int n;
  std::array<std::uint32_t, kMaxCeiling> adj{};
  std::array<std::uint32_t, kMaxCeiling> closed{};
  std::array<int, kMaxCeiling> order{};
  std::array<int, kMaxCeiling> placed{};
  std::uint32_t placed_mask = 0;
  Bits cur;
  std::optional<Bits> best;
  std::array<int, kMaxCeiling> best_perm{};

  explicit CanonSearch(const Graph& g) : n(g.order()) {
    for (int v = 0; v < n; ++v) {
      for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;
      closed[v] = adj[v] | (std::uint32_t{1} << v);
    }
    std::iota(order.begin(), order.begin() + n, 0);
    std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
      const int da = std::popcount(adj[a]), db = std::popcount(adj[b]);
      return da != db ? da < db : a < b;
    });
  }

  void run(int depth) {
    if (depth == n) {
      if (!best || cmp_prefix(cur, *best) < 0) {
        best = cur;
        std::copy(placed.begin(), placed.begin() + n, best_perm.begin());
      }
      return;
    }
    // Vertices with identical open or closed neighborhoods are swapped by
    // an automorphism, so one representative per class suffices.
    std::array<std::uint32_t, kMaxCeiling> tried_open{}, tried_closed{};
    int ntried = 0;
    for (int i = 0; i < n; ++i) {
      const int v = order[i];
      if ((placed_mask >> v) & 1) continue;
      bool twin = false;
      for (int t = 0; t < ntried && !twin; ++t)
        twin = tried_open[t] == adj[v] || tried_closed[t] == closed[v];
      if (twin) continue;
      tried_open[ntried] = adj[v];
      tried_closed[ntried] = closed[v];
      ++ntried;
      const Bits saved = cur;
      for (int k = 0; k < depth; ++k) cur.push((adj[v] >> placed[k]) & 1);
      if (!best || cmp_prefix(cur, *best) <= 0) {
        placed[depth] = v;
        placed_mask |= std::uint32_t{1} << v;
        run(depth + 1);
        placed_mask &= ~(std::uint32_t{1} << v);
      }
      cur = saved;
    }
  }
};

std::vector<int> canonical_order(const Graph& g, int ceiling) {
  if (ceiling > kMaxCeiling) ceiling = kMaxCeiling;
  if (g.order() > ceiling)
    fail(ErrorKind::TooLarge, "canonicalization limited to " + std::to_string(ceiling) +
                                  " vertices, got " + std::to_string(g.order()));
  CanonSearch search(g);
  search.run(0);
  return std::vector<int>(search.best_perm.begin(), search.best_perm.begin() + g.order());
}

}  // namespace

Graph canonical_relabel(const Graph& g, int ceiling) {
  const auto ordering = canonical_order(g, ceiling);
  std::vector<int> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[ordering[pos]] = pos;
  return relabel(g, perm);
}

CanonicalForm canonical_form(const Graph& g, int ceiling) {
  return CanonicalForm{encode_graph6(canonical_relabel(g, ceiling))};
}

bool are_isomorphic(const Graph& a, const Graph& b, int ceiling) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a, ceiling) == canonical_form(b, ceiling);
}

}  // namespace dlspec
