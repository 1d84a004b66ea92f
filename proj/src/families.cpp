#include "dlspec/families.hpp"

#include <cassert>
#include <charconv>

#include "dlspec/spectra.hpp"

namespace dlspec {

void VertexRoleMap::assign(const std::string& role, int vertex) {
  if (!roles_.emplace(role, vertex).second)
    fail(ErrorKind::BadParams, "duplicate role name " + role);
}

int VertexRoleMap::at(const std::string& role) const {
  auto it = roles_.find(role);
  if (it == roles_.end()) fail(ErrorKind::BadParams, "unknown role " + role);
  return it->second;
}

Graph make_path(int n) {
  if (n < 1) fail(ErrorKind::BadOrder, "paths need at least 1 vertex");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
  if (n < 3) fail(ErrorKind::BadOrder, "cycles need at least 3 vertices");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
  if (n < 1) fail(ErrorKind::BadOrder, "complete graphs need at least 1 vertex");
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::pair<Graph, VertexRoleMap> make_kite(int n) {
  if (n < 3) fail(ErrorKind::BadOrder, "kites need at least 3 vertices");
  std::vector<Graph::Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  VertexRoleMap roles;
  roles.assign("u1", 0);
  roles.assign("u2", 1);
  roles.assign("v2", 2);
  roles.assign("cycle2", 1);
  if (n >= 4) {
    edges.emplace_back(0, 3);
    roles.assign("v1", 3);
    for (int v = 4; v < n; ++v) {
      edges.emplace_back(v - 1, v);
      roles.assign("w" + std::to_string(v - 3), v);
    }
    roles.assign("pendant", n - 1);
  }
  return {Graph(n, std::move(edges)), std::move(roles)};
}

std::pair<Graph, VertexRoleMap> make_h_graph(int n) {
  if (n < 6) fail(ErrorKind::BadOrder, "H graphs need at least 6 vertices");
  std::vector<Graph::Edge> edges;
  VertexRoleMap roles;
  for (int i = 0; i < n - 4; ++i) {
    if (i > 0) edges.emplace_back(i - 1, i);
    roles.assign("w" + std::to_string(i + 1), i);
  }
  const int u1 = n - 4, u2 = n - 3, v1 = n - 2, v2 = n - 1;
  edges.emplace_back(0, u1);
  edges.emplace_back(u1, u2);
  edges.emplace_back(0, v1);
  edges.emplace_back(v1, v2);
  roles.assign("u1", u1);
  roles.assign("u2", u2);
  roles.assign("v1", v1);
  roles.assign("v2", v2);
  Graph g(n, std::move(edges));
#ifndef NDEBUG
  {
    const auto tr = apsp(g).transmissions;
    assert(2 * tr(n - 5) == n * n - n - 8);
    assert(2 * tr(0) == n * n - 9 * n + 32);
    assert(2 * tr(u1) == n * n - 7 * n + 24 && tr(u1) == tr(v1));
    assert(2 * tr(u2) == n * n - 5 * n + 20 && tr(u2) == tr(v2));
  }
#endif
  return {std::move(g), std::move(roles)};
}

std::pair<Graph, VertexRoleMap> make_c4_spider(int l1, int l2, int l3, int l4) {
  const std::array<int, 4> legs{l1, l2, l3, l4};
  for (int l : legs)
    if (l < 0) fail(ErrorKind::BadParams, "pendant path lengths must be nonnegative");
  std::vector<Graph::Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  VertexRoleMap roles;
  for (int i = 0; i < 4; ++i) roles.assign("w" + std::to_string(i + 1), i);
  static const char* stems[4] = {"u", "v", "z", "y"};
  int next = 4;
  for (int i = 0; i < 4; ++i) {
    int prev = i;
    for (int j = 1; j <= legs[i]; ++j) {
      edges.emplace_back(prev, next);
      roles.assign(stems[i] + std::to_string(j), next);
      prev = next++;
    }
  }
  return {Graph(next, std::move(edges)), std::move(roles)};
}

Graph attach_two_paths(const Graph& g, int u, int k, int l) {
  if (g.order() < 2 || !is_connected(g))
    fail(ErrorKind::BadParams, "base graph must be connected and nontrivial");
  if (u < 0 || u >= g.order())
    fail(ErrorKind::VertexOutOfRange, "anchor vertex out of range");
  if (k < 1 || l < 0) fail(ErrorKind::BadParams, "need k >= 1 and l >= 0");
  auto edges = g.edges();
  int next = g.order();
  int prev = u;
  for (int j = 0; j < k; ++j) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  prev = u;
  for (int j = 0; j < l; ++j) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  return Graph(next, std::move(edges));
}

Graph attach_at_two_vertices(const Graph& g, int u, int v, int k, int l) {
  if (g.order() < 2 || !is_connected(g))
    fail(ErrorKind::BadParams, "base graph must be connected and nontrivial");
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    fail(ErrorKind::VertexOutOfRange, "anchor vertex out of range");
  if (u == v) fail(ErrorKind::BadParams, "anchors must be distinct");
  if (k < 1 || l < 0) fail(ErrorKind::BadParams, "need k >= 1 and l >= 0");
  if (g.degree(u) < 2 || g.degree(v) < 2)
    fail(ErrorKind::DegreeTooSmall, "both anchors need degree at least 2");
  auto edges = g.edges();
  int next = g.order();
  int prev = u;
  for (int j = 0; j < k; ++j) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  prev = v;
  for (int j = 0; j < l; ++j) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
  return Graph(next, std::move(edges));
}

namespace {

int parse_int(const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail(ErrorKind::ParseError, "bad integer '" + text + "' in family spec");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// key=value fields, applied to n/k/l/base.
void apply_fields(FamilySpec& spec, const std::vector<std::string>& parts) {
  for (const auto& part : parts) {
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::ParseError, "expected key=value, got '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    if (key == "n")
      spec.n = parse_int(value);
    else if (key == "k")
      spec.k = parse_int(value);
    else if (key == "l")
      spec.l = parse_int(value);
    else if (key == "base")
      spec.base = value;
    else
      fail(ErrorKind::ParseError, "unknown family parameter '" + key + "'");
  }
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size())
    fail(ErrorKind::ParseError, "family spec must look like kind:params, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const auto parts = split(text.substr(colon + 1), ',');
  FamilySpec spec;
  if (kind == "path" || kind == "cycle" || kind == "kite" || kind == "h") {
    spec.kind = kind == "path"    ? FamilyKind::Path
                : kind == "cycle" ? FamilyKind::Cycle
                : kind == "kite"  ? FamilyKind::Kite
                                  : FamilyKind::HGraph;
    apply_fields(spec, parts);
    if (spec.n == 0) fail(ErrorKind::ParseError, kind + " spec needs n=<order>");
  } else if (kind == "c4spider") {
    spec.kind = FamilyKind::C4Spider;
    if (parts.size() != 4)
      fail(ErrorKind::ParseError, "c4spider spec needs 4 comma-separated lengths");
    for (int i = 0; i < 4; ++i) spec.legs[i] = parse_int(parts[i]);
  } else if (kind == "twopath") {
    spec.kind = FamilyKind::TwoPathAttach;
    apply_fields(spec, parts);
  } else if (kind == "twovertex") {
    spec.kind = FamilyKind::TwoVertexAttach;
    apply_fields(spec, parts);
    if (spec.base != "c3" && spec.base != "k4")
      fail(ErrorKind::ParseError, "twovertex base must be c3 or k4");
  } else {
    fail(ErrorKind::ParseError, "unknown family kind '" + kind + "'");
  }
  return spec;
}

std::string FamilySpec::text() const {
  switch (kind) {
    case FamilyKind::Path:
      return "path:n=" + std::to_string(n);
    case FamilyKind::Cycle:
      return "cycle:n=" + std::to_string(n);
    case FamilyKind::Kite:
      return "kite:n=" + std::to_string(n);
    case FamilyKind::HGraph:
      return "h:n=" + std::to_string(n);
    case FamilyKind::C4Spider:
      return "c4spider:" + std::to_string(legs[0]) + "," + std::to_string(legs[1]) + "," +
             std::to_string(legs[2]) + "," + std::to_string(legs[3]);
    case FamilyKind::TwoPathAttach:
      return "twopath:k=" + std::to_string(k) + ",l=" + std::to_string(l);
    case FamilyKind::TwoVertexAttach:
      return "twovertex:base=" + base + ",k=" + std::to_string(k) + ",l=" + std::to_string(l);
  }
  fail(ErrorKind::BadParams, "unhandled family kind");
}

int FamilySpec::order() const {
  switch (kind) {
    case FamilyKind::Path:
    case FamilyKind::Cycle:
    case FamilyKind::Kite:
    case FamilyKind::HGraph:
      return n;
    case FamilyKind::C4Spider:
      return 4 + legs[0] + legs[1] + legs[2] + legs[3];
    case FamilyKind::TwoPathAttach:
      return 3 + k + l;
    case FamilyKind::TwoVertexAttach:
      return (base == "k4" ? 4 : 3) + k + l;
  }
  fail(ErrorKind::BadParams, "unhandled family kind");
}

std::pair<Graph, VertexRoleMap> FamilySpec::build() const {
  switch (kind) {
    case FamilyKind::Path:
      return {make_path(n), {}};
    case FamilyKind::Cycle:
      return {make_cycle(n), {}};
    case FamilyKind::Kite:
      return make_kite(n);
    case FamilyKind::HGraph:
      return make_h_graph(n);
    case FamilyKind::C4Spider:
      return make_c4_spider(legs[0], legs[1], legs[2], legs[3]);
    case FamilyKind::TwoPathAttach:
      return {attach_two_paths(make_cycle(3), 0, k, l), {}};
    case FamilyKind::TwoVertexAttach: {
      const Graph g = base == "k4" ? make_complete(4) : make_cycle(3);
      return {attach_at_two_vertices(g, 0, 1, k, l), {}};
    }
  }
  fail(ErrorKind::BadParams, "unhandled family kind");
}

}  // namespace dlspec
