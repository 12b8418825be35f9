#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "indpoly/graph.hpp"

namespace indpoly {

// Edge-list text format, the interchange for all CLI commands:
//   first meaningful line   n <vertex_count>
//   optional line           r <root>
//   then one line per edge  u v          (0-indexed, u != v)
// Lines whose first non-space character is '#' are comments; blank lines are
// ignored; duplicate edges are rejected.

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    int line;
};

struct ParsedGraph {
    Graph graph;
    std::optional<int> root;
};

ParsedGraph read_edge_list(std::istream& in);
ParsedGraph read_edge_list_string(const std::string& text);
// Throws std::runtime_error when the file cannot be opened; ParseError
// (with line number) on malformed content.
ParsedGraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g,
                     std::optional<int> root = std::nullopt);
std::string edge_list_string(const Graph& g, std::optional<int> root = std::nullopt);
void write_edge_list_file(const std::string& path, const Graph& g,
                          std::optional<int> root = std::nullopt);

}  // namespace indpoly
