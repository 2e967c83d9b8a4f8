#pragma once

#include "bk/graph.hpp"

namespace bk::reference {

// Reference induced-subgraph detector: walk every vertex subset of the
// pattern's size and try every bijection onto it. Deliberately shares no
// machinery with the backtracking detector so the two can cross-check each
// other; sweeps report any disagreement. Cost is C(n, k) * k!, fine for the
// small n it is used at.
bool has_induced(const Graph& g, const Graph& pattern);

} // namespace bk::reference
