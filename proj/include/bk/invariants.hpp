#pragma once

#include "bk/coloring.hpp"
#include "bk/graph.hpp"
#include "bk/vertexset.hpp"

#include <cstdint>
#include <optional>

namespace bk {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchStats {
    std::uint64_t nodes = 0;
};

struct CliqueResult {
    int omega = 0;
    VertexSet witness;
    SearchStats stats;
};

bool is_clique(const Graph& g, VertexSet s);

// Exact maximum clique, branch and bound with a greedy-coloring bound.
// Deterministic: same input, same witness. Throws BudgetExceeded past the
// node budget.
CliqueResult max_clique(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// Exact k-colorability. Returns a proper total coloring using colors
// 0..k-1 or nullopt when none exists. Clique-seeded saturation search with
// color symmetry breaking (at most one fresh color per step).
std::optional<Coloring> k_colorable(const Graph& g, int k,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
    SearchStats stats; // summed over the clique bound and every k tried
};

ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

bool is_complete_graph(const Graph& g);
bool is_odd_cycle(const Graph& g);

// chi <= max degree unless complete or an odd cycle; input must be connected
bool brooks_check(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// chi <= max(omega, delta - 1), the inequality the toolkit exists to probe
bool bk_holds(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace bk
