#pragma once

#include "bk/coloring.hpp"
#include "bk/graph.hpp"
#include "bk/invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bk {

// What one vertex sees of a coloring: per-color neighbor counts plus the
// derived unique / repeated / missing color lists. Every neighbor of the
// center must be assigned; the center itself may be bare.
struct NeighborhoodSpectrum {
    int center = -1;
    std::vector<int> counts;        // indexed by color
    std::vector<int> unique_vertex; // the lone neighbor holding that color, else -1
    std::vector<int> repeat_colors; // ascending
    std::vector<int> missing_colors;
};

NeighborhoodSpectrum spectrum(const Graph& g, const Coloring& c, int u);

// Connected component of the subgraph induced by two color classes. Carries
// the version of the coloring it was cut from; applying it to a mutated
// coloring is refused.
struct KempeComponent {
    int color_i = -1; // normalized: color_i < color_j
    int color_j = -1;
    VertexSet members;
    std::uint64_t coloring_version = 0;
};

// Component containing v, which must wear color i or j.
KempeComponent kempe_component(const Graph& g, const Coloring& c, int v, int i, int j);

// Exchange the two colors on the component. Properness is preserved because
// the component is maximal; a second application undoes the first.
Coloring kempe_swap(const Graph& g, const Coloring& c, const KempeComponent& comp);

struct Move {
    enum class Tag { assign, recolor, pair, kempe };
    Tag tag = Tag::assign;
    int vertex = -1; // assign / recolor
    int color = -1;
    std::vector<std::pair<int, int>> writes; // pair: (vertex, color), applied in order
    int color_a = -1, color_b = -1, anchor = -1; // kempe
};

std::string move_trace_json(const std::vector<Move>& trace);

// Apply a trace to a copy of start. Kempe entries recompute their component
// from the anchor at replay time, so a trace pins down the exact coloring it
// was recorded against.
Coloring replay_trace(const Graph& g, const Coloring& start, const std::vector<Move>& trace);

struct ExtendOptions {
    std::uint64_t max_states = 100'000; // stored coloring states, transpositions included
    std::uint64_t solver_node_budget = kDefaultNodeBudget;
};

struct ExtensionStats {
    std::uint64_t states_expanded = 0;
    std::uint64_t states_generated = 0;
    bool budget_hit = false;
};

// extended: a total proper coloring was reached, trace tells how.
// exhausted: the move set ran out (or hit its budget) but an exact solve
//            shows some total k-coloring exists.
// impossible: certified by the exact solver, no k-coloring of g at all.
struct ExtensionResult {
    enum class Outcome { extended, exhausted, impossible };
    Outcome outcome = Outcome::exhausted;
    std::optional<Coloring> coloring;
    std::vector<Move> trace;
    ExtensionStats stats;
};

// Breadth-first search over Kempe-swapped variants of c, trying at each
// state: assign a missing color to u; recolor a unique neighbor toward its
// own missing color, freeing one for u; or the paired recolor that moves two
// unique neighbors onto a shared third color. c must color everything but u.
ExtensionResult extend_coloring(const Graph& g, int u, const Coloring& c,
                                const ExtendOptions& opt = {});

struct RecolorOutcome {
    enum class Route { extension, fallback, none };
    Route route = Route::none;
    std::optional<Coloring> coloring;
    std::vector<Move> trace; // nonempty only on the extension route
    ExtensionStats ext_stats;
};

// Color g - u with k colors exactly, then pull u back in through
// extend_coloring; fall back to a full exact solve when the move set gives
// out. No coloring comes back iff g itself has no proper k-coloring.
RecolorOutcome delete_and_recolor(const Graph& g, int u, int k, const ExtendOptions& opt = {});

} // namespace bk
