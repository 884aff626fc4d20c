#pragma once

#include <string>
#include <string_view>

#include "k4tri/graph.hpp"

namespace k4tri {

/// graph6 encoding (nauty format). Orders up to 62 use the one-byte size
/// prefix; 63 and 64 use the '~' + 18-bit form.
std::string encode_graph6(const Graph& g);

/// Parses one graph6 record. Surrounding whitespace and an optional
/// ">>graph6<<" header are accepted; anything else malformed throws
/// Error(kParseError).
Graph parse_graph6(std::string_view text);

}  // namespace k4tri
