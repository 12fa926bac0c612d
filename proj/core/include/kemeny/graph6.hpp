#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "kemeny/graph.hpp"

namespace kemeny {

/// Largest order representable in the short graph6 header.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Decodes one graph6 line (short form, n <= 62). An optional ">>graph6<<"
/// prefix and trailing newline/carriage return are accepted.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// Reads the next line with trailing whitespace and any ">>graph6<<" header
/// removed. Blank lines come back empty. Returns false at end of stream.
bool read_graph6_line(std::istream& in, std::string& line);

}  // namespace kemeny
