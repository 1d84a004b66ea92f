#include "dlspec/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>

#include "dlspec/graph6.hpp"

namespace dlspec {

namespace {

// Rooted trees up to isomorphism, identified by table index. A class is a
// sorted list of child class ids; generating children as non-decreasing id
// sequences makes every class appear exactly once.
struct RootedTreeTable {
  std::vector<int> size;
  std::vector<std::vector<int>> children;

  explicit RootedTreeTable(int max_size) {
    size.push_back(1);
    children.push_back({});
    std::vector<int> current;
    for (int s = 2; s <= max_size; ++s) extend(s, s - 1, 0, current);
  }

  void extend(int target, int remaining, int min_id, std::vector<int>& current) {
    if (remaining == 0) {
      size.push_back(target);
      children.push_back(current);
      return;
    }
    for (int id = min_id; id < static_cast<int>(size.size()); ++id) {
      if (size[id] > remaining) continue;
      current.push_back(id);
      extend(target, remaining - size[id], id, current);
      current.pop_back();
    }
  }
};

// Appends the tree rooted at cycle vertex `root` using fresh labels.
void expand_tree(const RootedTreeTable& table, int id, int root, int& next,
                 std::vector<Graph::Edge>& edges) {
  for (int child : table.children[id]) {
    const int v = next++;
    edges.emplace_back(root, v);
    expand_tree(table, child, v, next, edges);
  }
}

bool dihedral_minimal(const std::vector<int>& tuple) {
  const int g = static_cast<int>(tuple.size());
  std::vector<int> other(g);
  for (int rot = 0; rot < g; ++rot) {
    for (int i = 0; i < g; ++i) other[i] = tuple[(i + rot) % g];
    if (rot > 0 && other < tuple) return false;
    std::reverse(other.begin(), other.end());
    if (other < tuple) return false;
  }
  return true;
}

struct Generator {
  const RootedTreeTable& table;
  int n;
  int g;
  int shard = 0;
  int shards = 1;
  std::set<std::string>* out;
  int ceiling;
  std::vector<int> tuple;

  void emit() {
    if (!dihedral_minimal(tuple)) return;
    std::vector<Graph::Edge> edges;
    for (int i = 0; i + 1 < g; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(g - 1, 0);
    int next = g;
    for (int i = 0; i < g; ++i) expand_tree(table, tuple[i], i, next, edges);
    out->insert(canonical_form(Graph(n, std::move(edges)), ceiling).bytes);
  }

  void fill(int pos, int remaining) {
    if (pos == g) {
      if (remaining == 0) emit();
      return;
    }
    if (pos == 1 && (g + tuple[0]) % shards != shard) return;
    for (int id = 0; id < static_cast<int>(table.size.size()); ++id) {
      if (table.size[id] > remaining - (g - pos - 1)) continue;
      tuple[pos] = id;
      fill(pos + 1, remaining - table.size[id]);
    }
  }
};

std::set<std::string> enumerate_shard(int n, int shard, int shards, int ceiling) {
  const RootedTreeTable table(n - 2);
  std::set<std::string> certs;
  for (int g = 3; g <= n; ++g) {
    Generator gen{table, n, g, shard, shards, &certs, ceiling, std::vector<int>(g)};
    gen.fill(0, n);
  }
  return certs;
}

}  // namespace

EnumerationReport partitioned_enumerate(int n, int shards, int ceiling) {
  if (ceiling > kMaxCeiling) ceiling = kMaxCeiling;
  if (n < 3 || n > ceiling)
    fail(ErrorKind::TooLarge,
         "enumeration supports 3 <= n <= " + std::to_string(ceiling) + ", got " + std::to_string(n));
  if (shards < 1) fail(ErrorKind::BadParams, "shard count must be at least 1");

  const auto start = std::chrono::steady_clock::now();
  std::set<std::string> merged;
  if (shards == 1) {
    merged = enumerate_shard(n, 0, 1, ceiling);
  } else {
    std::vector<std::future<std::set<std::string>>> parts;
    for (int shard = 0; shard < shards; ++shard)
      parts.push_back(std::async(std::launch::async, enumerate_shard, n, shard, shards, ceiling));
    for (auto& part : parts) merged.merge(part.get());
  }

  EnumerationReport report;
  report.n = n;
  report.graphs.assign(merged.begin(), merged.end());
  report.count = report.graphs.size();
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

EnumerationReport enumerate_unicyclic(int n, int ceiling) {
  return partitioned_enumerate(n, 1, ceiling);
}

std::vector<std::string> connected_graphs_up_to_iso(int n) {
  if (n < 1 || n > 7)
    fail(ErrorKind::TooLarge, "connected graph sweep supports n <= 7, got " + std::to_string(n));
  std::vector<Graph::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int m = static_cast<int>(pairs.size());
  std::set<std::string> certs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    Graph g(n, std::move(edges));
    if (!is_connected(g)) continue;
    certs.insert(canonical_form(g, kMaxCeiling).bytes);
  }
  return {certs.begin(), certs.end()};
}

Graph prufer_to_tree(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int c : code) {
    if (c < 0 || c >= n) fail(ErrorKind::BadParams, "Pruefer symbol out of range");
    ++degree[c];
  }
  std::vector<Graph::Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int c : code) {
    edges.emplace_back(leaf, c);
    degree[leaf] = 0;
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      while (degree[++ptr] != 1) {
      }
      leaf = ptr;
    }
  }
  int last = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1 && v != leaf) last = v;
  edges.emplace_back(leaf, last);
  return Graph(n, std::move(edges));
}

}  // namespace dlspec
