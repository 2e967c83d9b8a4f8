#pragma once

#include "bk/graph.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace bk {

// Canonical certificate of an isomorphism class: the lexicographically
// least column-major upper-triangle adjacency bit string over all vertex
// orderings compatible with the refined degree partition. Two graphs get
// equal certificates iff they are isomorphic.
struct Certificate {
    int n = 0;
    std::vector<std::uint64_t> words; // bit 0 of the string sits in the MSB of words[0]

    friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

inline constexpr std::uint64_t kCanonicalNodeBudget = 10'000'000;

// Throws BudgetExceeded if the ordering search visits more than node_budget
// placement nodes. The budget never triggers below ~10 vertices in practice;
// it guards against pathological regular inputs near n = 64.
Certificate canonical_form(const Graph& g, std::uint64_t node_budget = kCanonicalNodeBudget);

inline constexpr int kEnumerationCap = 8;

// One representative per isomorphism class on n vertices, in ascending
// certificate order. Extend-and-canonize: representatives on m vertices are
// extended by every possible neighborhood of a new vertex m, and duplicates
// are collapsed through their certificates.
std::vector<Graph> enumerate_graphs(int n, int hard_cap = kEnumerationCap,
                                    std::uint64_t node_budget = kCanonicalNodeBudget);

// G(n, p) with a splitmix64 stream: pairs (i, j), i < j, visited in
// lexicographic order, one draw per pair, edge iff draw < p. Identical seeds
// give identical graphs on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

} // namespace bk
