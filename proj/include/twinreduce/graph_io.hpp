#pragma once

#include <string>
#include <string_view>

#include "twinreduce/graph.hpp"

namespace twinreduce {

/// Largest vertex count accepted by the text readers.
inline constexpr std::size_t kMaxParsedVertices = 1U << 16;

/// Decodes a graph6 string, optionally prefixed by ">>graph6<<". A single
/// trailing newline is tolerated; anything else after the encoded bits is an
/// error.
Graph parse_graph6(std::string_view text);
/// graph6 encoding, without header or newline.
std::string write_graph6(const Graph& g);

/// "n <count>" on the first line, then one "u v" edge per line. Blank lines
/// and lines starting with '#' are ignored; duplicate edges collapse.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Edge list if the first significant token is "n", graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace twinreduce
