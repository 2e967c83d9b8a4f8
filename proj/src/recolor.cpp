#include "bk/recolor.hpp"

#include "bk/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bk {

namespace {

using json = nlohmann::json;

std::uint64_t mix64(std::uint64_t h, std::uint64_t x)
{
    std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t hash_colors(const std::vector<int>& colors)
{
    std::uint64_t h = mix64(0, colors.size());
    for (int c : colors)
        h = mix64(h, static_cast<std::uint64_t>(c + 1));
    return h;
}

VertexSet flood_two_colors(const Graph& g, const std::vector<int>& colors, int start, int i, int j)
{
    VertexSet comp = VertexSet::single(start);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier)
            for (int u : g.neighbors(v))
                if (colors[u] == i || colors[u] == j)
                    next.add(u);
        frontier = next - comp;
        comp = comp | next;
    }
    return comp;
}

} // namespace

NeighborhoodSpectrum spectrum(const Graph& g, const Coloring& c, int u)
{
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("spectrum: coloring size does not match graph");
    if (u < 0 || u >= g.vertex_count())
        throw std::invalid_argument("spectrum: vertex out of range");

    NeighborhoodSpectrum s;
    s.center = u;
    s.counts.assign(c.palette(), 0);
    s.unique_vertex.assign(c.palette(), -1);
    for (int v : g.neighbors(u)) {
        if (!c.assigned(v))
            throw std::invalid_argument("spectrum: neighbor " + std::to_string(v)
                                        + " of " + std::to_string(u) + " is uncolored");
        int col = c.color(v);
        if (++s.counts[col] == 1)
            s.unique_vertex[col] = v;
        else
            s.unique_vertex[col] = -1;
    }
    for (int col = 0; col < c.palette(); ++col) {
        if (s.counts[col] == 0)
            s.missing_colors.push_back(col);
        else if (s.counts[col] > 1)
            s.repeat_colors.push_back(col);
    }
    return s;
}

KempeComponent kempe_component(const Graph& g, const Coloring& c, int v, int i, int j)
{
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("kempe_component: coloring size does not match graph");
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("kempe_component: vertex out of range");
    if (i == j || i < 0 || j < 0 || i >= c.palette() || j >= c.palette())
        throw std::invalid_argument("kempe_component: need two distinct palette colors");
    if (c.color(v) != i && c.color(v) != j)
        throw std::invalid_argument("kempe_component: vertex " + std::to_string(v)
                                    + " wears neither color");

    KempeComponent comp;
    comp.color_i = std::min(i, j);
    comp.color_j = std::max(i, j);
    comp.members = flood_two_colors(g, c.assignment(), v, i, j);
    comp.coloring_version = c.version();
    return comp;
}

Coloring kempe_swap(const Graph& g, const Coloring& c, const KempeComponent& comp)
{
    if (comp.coloring_version != c.version())
        throw std::invalid_argument("kempe_swap: component is stale for this coloring");
    if (!comp.members.is_subset_of(g.vertices()))
        throw std::invalid_argument("kempe_swap: component leaves the graph");

    Coloring out = c;
    for (int v : comp.members) {
        int col = c.color(v);
        out.set(v, col == comp.color_i ? comp.color_j : comp.color_i);
    }
    return out;
}

std::string move_trace_json(const std::vector<Move>& trace)
{
    // serialized colors are 1-based; vertices and the in-memory Move stay 0-based
    json arr = json::array();
    for (const Move& m : trace) {
        json e;
        switch (m.tag) {
        case Move::Tag::assign:
            e = {{"move", "assign"}, {"vertex", m.vertex}, {"color", m.color + 1}};
            break;
        case Move::Tag::recolor:
            e = {{"move", "recolor"}, {"vertex", m.vertex}, {"color", m.color + 1}};
            break;
        case Move::Tag::pair: {
            json writes = json::array();
            for (auto& [v, c] : m.writes)
                writes.push_back({v, c + 1});
            e = {{"move", "pair"}, {"writes", writes}};
            break;
        }
        case Move::Tag::kempe:
            e = {{"move", "kempe"}, {"colors", {m.color_a + 1, m.color_b + 1}}, {"anchor", m.anchor}};
            break;
        }
        arr.push_back(e);
    }
    return arr.dump();
}

namespace {

void apply_move(const Graph& g, Coloring& c, const Move& m)
{
    switch (m.tag) {
    case Move::Tag::assign:
        if (c.assigned(m.vertex))
            throw std::invalid_argument("replay: assign hit a colored vertex");
        c.set(m.vertex, m.color);
        break;
    case Move::Tag::recolor:
        if (!c.assigned(m.vertex))
            throw std::invalid_argument("replay: recolor hit a bare vertex");
        c.set(m.vertex, m.color);
        break;
    case Move::Tag::pair:
        for (auto& [v, col] : m.writes)
            c.set(v, col);
        break;
    case Move::Tag::kempe: {
        KempeComponent comp = kempe_component(g, c, m.anchor, m.color_a, m.color_b);
        c = kempe_swap(g, c, comp);
        break;
    }
    }
}

} // namespace

Coloring replay_trace(const Graph& g, const Coloring& start, const std::vector<Move>& trace)
{
    Coloring c = start;
    for (const Move& m : trace)
        apply_move(g, c, m);
    return c;
}

namespace {

// assigned-neighbor color counts from a raw assignment; the one bare vertex
// (the extension target) simply contributes nothing
struct Census {
    std::array<int, kMaxVertices> count{};
    std::array<int, kMaxVertices> unique{}; // vertex or -1

    Census() { unique.fill(-1); }
};

Census census_of(const Graph& g, const std::vector<int>& colors, int v)
{
    Census c;
    for (int u : g.neighbors(v)) {
        int col = colors[u];
        if (col == kUncolored)
            continue;
        c.unique[col] = (++c.count[col] == 1) ? u : -1;
    }
    return c;
}

struct SearchState {
    std::vector<int> colors;
    int parent = -1;
    Move via; // kempe move that produced this state from parent
};

// moves that finish the extension from one state, or empty if none applies
std::vector<Move> direct_moves(const Graph& g, const std::vector<int>& colors, int u, int k)
{
    Census at_u = census_of(g, colors, u);

    // take a missing color outright
    for (int c = 0; c < k; ++c)
        if (at_u.count[c] == 0)
            return {Move{Move::Tag::assign, u, c, {}, -1, -1, -1}};

    // push a unique neighbor onto a color its own neighborhood misses
    for (int i = 0; i < k; ++i) {
        int ai = at_u.unique[i];
        if (ai < 0)
            continue;
        Census at_ai = census_of(g, colors, ai);
        for (int alpha = 0; alpha < k; ++alpha) {
            if (alpha == i || at_ai.count[alpha] != 0)
                continue;
            return {Move{Move::Tag::recolor, ai, alpha, {}, -1, -1, -1},
                    Move{Move::Tag::assign, u, i, {}, -1, -1, -1}};
        }
    }

    // paired recolor: two unique neighbors A_i, A_j both move onto m, whose
    // lone carrier A_m takes i, and u takes j
    std::array<Census, kMaxVertices> cache;
    std::array<bool, kMaxVertices> cached{};
    auto censor = [&](int v) -> const Census& {
        if (!cached[v]) {
            cache[v] = census_of(g, colors, v);
            cached[v] = true;
        }
        return cache[v];
    };

    for (int i = 0; i < k; ++i) {
        int ai = at_u.unique[i];
        if (ai < 0)
            continue;
        for (int j = 0; j < k; ++j) {
            int aj = at_u.unique[j];
            if (j == i || aj < 0 || g.adjacent(ai, aj))
                continue;
            for (int m = 0; m < k; ++m) {
                int am = at_u.unique[m];
                if (m == i || m == j || am < 0)
                    continue;
                const Census& ci = censor(ai);
                if (ci.count[m] != 1 || ci.unique[m] != am)
                    continue;
                const Census& cj = censor(aj);
                if (cj.count[m] != 1 || cj.unique[m] != am)
                    continue;
                const Census& cm = censor(am);
                if (cm.count[i] != 1 || cm.unique[i] != ai)
                    continue;

                Move pair{Move::Tag::pair, -1, -1,
                          {{ai, m}, {aj, m}, {am, i}, {u, j}},
                          -1, -1, -1};
                // the census conditions should suffice; verify anyway before
                // letting the move out
                std::vector<int> after = colors;
                for (auto& [v, col] : pair.writes)
                    after[v] = col;
                bool proper = true;
                for (int v = 0; v < g.vertex_count() && proper; ++v)
                    for (int w : g.neighbors(v))
                        if (w > v && after[v] != kUncolored && after[v] == after[w]) {
                            proper = false;
                            break;
                        }
                if (proper)
                    return {pair};
            }
        }
    }

    return {};
}

} // namespace

ExtensionResult extend_coloring(const Graph& g, int u, const Coloring& c, const ExtendOptions& opt)
{
    int n = g.vertex_count();
    if (u < 0 || u >= n)
        throw std::invalid_argument("extend_coloring: vertex out of range");
    if (c.size() != n)
        throw std::invalid_argument("extend_coloring: coloring size does not match graph");
    if (c.assigned(u))
        throw std::invalid_argument("extend_coloring: target vertex already colored");
    for (int v = 0; v < n; ++v)
        if (v != u && !c.assigned(v))
            throw std::invalid_argument("extend_coloring: vertex " + std::to_string(v)
                                        + " is uncolored but is not the target");
    if (!is_proper(g, c))
        throw std::invalid_argument("extend_coloring: starting coloring is improper");
    if (c.palette() > kMaxVertices)
        throw std::invalid_argument("extend_coloring: palette wider than any graph here needs");

    int k = c.palette();
    ExtensionResult result;

    std::vector<SearchState> states;
    std::unordered_set<std::uint64_t> seen;
    states.push_back({c.assignment(), -1, {}});
    seen.insert(hash_colors(states[0].colors));
    result.stats.states_generated = 1;

    for (std::size_t head = 0; head < states.size(); ++head) {
        if (result.stats.states_expanded >= opt.max_states) {
            result.stats.budget_hit = true;
            break;
        }
        ++result.stats.states_expanded;

        std::vector<Move> finish = direct_moves(g, states[head].colors, u, k);
        if (!finish.empty()) {
            std::vector<Move> trace;
            for (int s = static_cast<int>(head); s > 0; s = states[s].parent)
                trace.push_back(states[s].via);
            std::reverse(trace.begin(), trace.end());
            for (Move& m : finish)
                trace.push_back(std::move(m));

            Coloring out = Coloring::from_assignment(states[head].colors, k);
            for (std::size_t m = trace.size() - finish.size(); m < trace.size(); ++m)
                apply_move(g, out, trace[m]);
            if (!out.total() || !is_proper(g, out))
                throw std::logic_error("extend_coloring produced an improper coloring");

            result.outcome = ExtensionResult::Outcome::extended;
            result.coloring = std::move(out);
            result.trace = std::move(trace);
            return result;
        }

        // successors: swap any two-color component that touches N(u);
        // copied because push_back below may reallocate the state pool
        const std::vector<int> cols = states[head].colors;
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                VertexSet visited;
                for (int w = 0; w < n; ++w) {
                    if (visited.contains(w) || (cols[w] != a && cols[w] != b))
                        continue;
                    VertexSet comp = flood_two_colors(g, cols, w, a, b);
                    visited = visited | comp;
                    if (!comp.intersects(g.neighbors(u)))
                        continue;

                    std::vector<int> next = cols;
                    for (int v : comp)
                        next[v] = (cols[v] == a) ? b : a;
                    std::uint64_t h = hash_colors(next);
                    if (!seen.insert(h).second)
                        continue;
                    if (states.size() >= opt.max_states) {
                        result.stats.budget_hit = true;
                    } else {
                        ++result.stats.states_generated;
                        states.push_back({std::move(next), static_cast<int>(head),
                                          Move{Move::Tag::kempe, -1, -1, {}, a, b, comp.min()}});
                    }
                }
            }
        }
    }

    // the move set gave out; let the exact solver pronounce
    auto full = k_colorable(g, k, opt.solver_node_budget);
    result.outcome = full ? ExtensionResult::Outcome::exhausted : ExtensionResult::Outcome::impossible;
    return result;
}

RecolorOutcome delete_and_recolor(const Graph& g, int u, int k, const ExtendOptions& opt)
{
    int n = g.vertex_count();
    if (u < 0 || u >= n)
        throw std::invalid_argument("delete_and_recolor: vertex out of range");
    if (k < 0 || k > kMaxVertices)
        throw std::invalid_argument("delete_and_recolor: palette out of range");

    RecolorOutcome out;

    Graph h = induced_subgraph(g, g.vertices() - VertexSet::single(u));
    auto hc = k_colorable(h, k, opt.solver_node_budget);
    if (!hc)
        return out; // g - u needs more than k colors, so g does too

    Coloring partial(n, k);
    int t = 0;
    for (int v = 0; v < n; ++v) {
        if (v == u)
            continue;
        partial.set(v, hc->color(t++));
    }

    ExtensionResult ext = extend_coloring(g, u, partial, opt);
    out.ext_stats = ext.stats;
    switch (ext.outcome) {
    case ExtensionResult::Outcome::extended:
        out.route = RecolorOutcome::Route::extension;
        out.coloring = std::move(ext.coloring);
        out.trace = std::move(ext.trace);
        break;
    case ExtensionResult::Outcome::impossible:
        break; // certified: no k-coloring of g
    case ExtensionResult::Outcome::exhausted: {
        auto full = k_colorable(g, k, opt.solver_node_budget);
        if (full) {
            out.route = RecolorOutcome::Route::fallback;
            out.coloring = std::move(full);
        }
        break;
    }
    }
    return out;
}

} // namespace bk
