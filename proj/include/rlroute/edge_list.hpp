#pragma once

#include <filesystem>
#include <iosfwd>

#include "rlroute/graph.hpp"

namespace rlroute {

// Text format: first line "n m", then m lines "u v" with 0-indexed u < v.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

// Throws ParseError (with the offending line) on malformed input.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

}  // namespace rlroute
