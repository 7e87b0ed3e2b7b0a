#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "slee/graph.hpp"

namespace slee {

/// Standard graph6 encoding (upper triangle, column-major, 6 bits per byte).
std::string graph6_encode(const Graph& g);
/// Throws ParseError carrying the byte offset of the first bad byte.
Graph graph6_decode(std::string_view text);

/// One graph per line; blank lines and a leading ">>graph6<<" header are skipped.
/// Throws std::runtime_error naming the path if it cannot be opened.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs);

/// Layout-free Graphviz description.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace slee
