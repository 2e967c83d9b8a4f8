#pragma once

#include "bk/graph.hpp"

#include <string>
#include <string_view>

namespace bk {

// graph6 text format, short form only (n <= 62). One graph per line: a size
// byte n + 63, then the upper triangle of the adjacency matrix column by
// column, six bits per printable character. Malformed input throws
// std::invalid_argument with the offending detail.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

inline constexpr int kGraph6MaxVertices = 62;

} // namespace bk
