#pragma once

#include <string>

#include "dlspec/graph.hpp"

namespace dlspec {

// graph6 text encoding for graphs on at most 62 vertices: one header byte
// n+63, then the upper triangle in column-major order packed 6 bits per
// byte (each +63), zero-padded.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& text);

}  // namespace dlspec
