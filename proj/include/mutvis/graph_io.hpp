#pragma once

#include <iosfwd>
#include <string>

#include "mutvis/graph.hpp"

namespace mutvis {

// Plain-text graph format: lines starting with '#' and blank lines are ignored; the
// first remaining line holds the vertex count n, every later line one edge "u v" with
// 0 <= u, v < n and u != v. Repeated edges are merged.

/// Throws InvalidInput naming the offending line.
Graph read_graph(std::istream &in, const std::string &source = "<input>");
Graph parse_graph_file(const std::string &path);

/// Writes g in the format above, preceded by a "# <header>" comment when header is non-empty.
void write_graph(std::ostream &out, const Graph &g, const std::string &header = {});
/// Throws std::runtime_error if the file cannot be written.
void export_graph_file(const std::string &path, const Graph &g, const std::string &header = {});

} // namespace mutvis
