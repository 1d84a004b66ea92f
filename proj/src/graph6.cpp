#include "dlspec/graph6.hpp"

#include <vector>

namespace dlspec {

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) fail(ErrorKind::TooLarge, "graph6 encoding limited to 62 vertices here");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph decode_graph6(const std::string& text) {
  if (text.empty()) fail(ErrorKind::MalformedGraph6, "empty graph6 string");
  const int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
  if (n < 1 || n > 62)
    fail(ErrorKind::MalformedGraph6, "graph6 header byte out of range");
  const int nbits = n * (n - 1) / 2;
  const int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + nbytes)
    fail(ErrorKind::MalformedGraph6, "graph6 string has wrong length");
  std::vector<int> bits;
  bits.reserve(nbytes * 6);
  for (int i = 1; i <= nbytes; ++i) {
    const int c = static_cast<int>(static_cast<unsigned char>(text[i])) - 63;
    if (c < 0 || c > 63) fail(ErrorKind::MalformedGraph6, "graph6 byte out of range");
    for (int b = 5; b >= 0; --b) bits.push_back((c >> b) & 1);
  }
  for (int i = nbits; i < static_cast<int>(bits.size()); ++i)
    if (bits[i] != 0) fail(ErrorKind::MalformedGraph6, "nonzero padding bits");
  std::vector<Graph::Edge> edges;
  int i = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (bits[i++]) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace dlspec
