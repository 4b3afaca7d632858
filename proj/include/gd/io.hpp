#pragma once

#include <iosfwd>
#include <string>

#include "gd/graph.hpp"

namespace gd {

// Reads "p edge <n> <m>" followed by m lines "e <u> <v>" (1-based ids).
// Lines starting with '#' and blank lines are skipped. Throws ParseError
// with the offending line number.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
Graph read_graph_file(const std::string& path);

// Writes g in the same format; each comment line is prefixed with "# ".
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
std::string format_graph(const Graph& g, const std::vector<std::string>& comments = {});

}  // namespace gd
