#pragma once

#include "bk/graph.hpp"

#include <vector>

namespace testutil {

// outer C5, inner pentagram, spokes
inline bk::Graph petersen()
{
    std::vector<bk::Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
        e.push_back({i, 5 + i});
    }
    return bk::build_graph(10, e);
}

} // namespace testutil
