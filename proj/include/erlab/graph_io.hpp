#pragma once

#include "erlab/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace erlab {

/// Standard graph6 encoding (no trailing newline).
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" prefix is accepted.
/// Throws ParseError with the offending byte offset on malformed input.
Graph graph6_decode(std::string_view text);

/// One graph6 string per non-empty line.
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, const std::vector<Graph>& graphs);

/// "n=<count>" header followed by one "u v" line per edge (u < v).
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::string_view text);

/// Loads a graph from a file, choosing the format by content: a leading
/// "n=" selects the edge-list format, anything else is read as graph6.
Graph read_graph_file(const std::string& path);

}  // namespace erlab
