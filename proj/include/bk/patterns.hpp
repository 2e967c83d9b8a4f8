#pragma once

#include "bk/graph.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace bk {

// The forbidden induced subgraphs the toolkit knows about, all on at most 5
// vertices. chair = claw with one edge subdivided; the union patterns carry
// isolated vertices.
enum class Pattern {
    claw,
    c4,
    p3,
    p4,
    p5,
    chair,
    p4_plus_k1,
    p3_plus_k1,
    k2_plus_2k1,
    three_k1,
};

inline constexpr std::array<Pattern, 10> kAllPatterns = {
    Pattern::claw,       Pattern::c4,         Pattern::p3,         Pattern::p4,
    Pattern::p5,         Pattern::chair,      Pattern::p4_plus_k1, Pattern::p3_plus_k1,
    Pattern::k2_plus_2k1, Pattern::three_k1,
};

const Graph& pattern_graph(Pattern p);
std::string_view pattern_name(Pattern p); // stable: "claw", "c4", ..., "3k1"
std::optional<Pattern> pattern_from_name(std::string_view name);

// pattern vertex -> host vertex, induced: host edges exactly mirror pattern
// edges on the image
using Embedding = std::vector<int>;

bool validate_embedding(const Graph& g, Pattern p, const Embedding& emb);

// First embedding in the detector's deterministic order, if any. Returned
// witnesses are re-checked edge-by-edge before they leave this function.
std::optional<Embedding> find_induced(const Graph& g, Pattern p);

bool is_free(const Graph& g, Pattern p);

struct DenseWitness {
    int u = -1;
    int v = -1;
    VertexSet excess; // the neighbors of u beyond v that v misses
};

// Every vertex u and every neighbor v: at most t neighbors of u are neither
// v nor adjacent to v.
bool dense_neighborhoods(const Graph& g, int t = 3);
std::optional<DenseWitness> find_dense_violation(const Graph& g, int t = 3);

// Weaker reading: some maximum-degree vertex u passes the same bound against
// each of its neighbors. Reported alongside the strict version, never in
// place of it.
bool dense_neighborhoods_at_max_degree(const Graph& g, int t = 3);

struct ClassMembership {
    std::array<bool, kAllPatterns.size()> free_of{};
    std::array<std::optional<Embedding>, kAllPatterns.size()> witness{};
    bool dense3 = false;
    bool dense3_max_degree = false;
    std::optional<DenseWitness> dense_violation;

    bool free(Pattern p) const { return free_of[static_cast<std::size_t>(p)]; }
    const std::optional<Embedding>& witness_of(Pattern p) const
    {
        return witness[static_cast<std::size_t>(p)];
    }

    // one of the classes the verification targets: p4+k1-free, p5-free,
    // chair-free, or dense 3-neighborhoods
    bool in_claimed_class() const
    {
        return free(Pattern::p4_plus_k1) || free(Pattern::p5) || free(Pattern::chair) || dense3;
    }
};

ClassMembership classify_graph(const Graph& g, int dense_t = 3);

} // namespace bk
