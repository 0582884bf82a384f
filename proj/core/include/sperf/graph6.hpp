#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "sperf/graph.hpp"

namespace sperf {

inline constexpr int kMaxGraph6Order = 62;

// Decodes one graph6 record (no header, no trailing newline).
Graph parse_graph6(std::string_view record);
std::string write_graph6(const Graph& g);

// Reads newline-separated graph6 records; an optional ">>graph6<<" header is
// skipped, blank lines are ignored. Throws StreamParseError naming the 1-based
// record number on a malformed record.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace sperf
