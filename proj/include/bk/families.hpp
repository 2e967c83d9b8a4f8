#pragma once

#include "bk/graph.hpp"

#include <vector>

namespace bk {

Graph complete(int n);
Graph cycle(int n);  // n >= 3
Graph path(int n);   // n >= 1, n - 1 edges

// Parts listed in order; vertices of part p come before part p+1. Edges join
// every pair from different parts.
Graph complete_multipartite(const std::vector<int>& part_sizes);

// Vertices are the edges of g in lexicographic order; two meet iff the edges
// share an endpoint. Line graphs are claw-free, which is what the samplers
// lean on.
Graph line_graph(const Graph& g);

} // namespace bk
