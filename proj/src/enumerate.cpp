#include "bk/enumerate.hpp"

#include "bk/errors.hpp"
#include "bk/prng.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace bk {

namespace {

// Iterated neighbor-color refinement. Start from degree ranks, re-color by
// (own color, sorted multiset of neighbor colors) until the partition stops
// splitting. Cell order follows signature order, which is label-independent,
// so isomorphic graphs end up with matching cell sequences.
std::vector<std::vector<int>> refine_cells(const Graph& g)
{
    int n = g.vertex_count();
    std::vector<int> color(n, 0);

    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v)
        degs[v] = g.degree(v);
    std::vector<int> ranks = degs;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (int v = 0; v < n; ++v)
        color[v] = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), degs[v]) - ranks.begin());

    int count = static_cast<int>(ranks.size());
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
        for (int v = 0; v < n; ++v) {
            std::vector<int> around;
            for (int u : g.neighbors(v))
                around.push_back(color[u]);
            std::sort(around.begin(), around.end());
            groups[{color[v], std::move(around)}].push_back(v);
        }
        if (static_cast<int>(groups.size()) == count) {
            std::vector<std::vector<int>> cells;
            cells.reserve(groups.size());
            for (auto& [sig, members] : groups)
                cells.push_back(std::move(members));
            return cells;
        }
        int next = 0;
        for (auto& [sig, members] : groups) {
            for (int v : members)
                color[v] = next;
            ++next;
        }
        count = next;
    }
}

// Branch-and-bound over vertex orderings that fill the refined cells in
// order. cur[p] holds the adjacency column of position p against positions
// 0..p-1; the packed certificate string is cur[1] cur[2] ... cur[n-1]. A
// column compares bit 0 first, so the earliest differing position decides.
struct CanonicalSearch {
    const Graph& g;
    int n;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    std::vector<int> cell_of_pos;             // position -> cell index
    std::vector<std::vector<int>> cells;

    std::array<std::uint64_t, kMaxVertices> colbits{}; // vertex -> assigned positions adjacent to it
    std::array<std::uint64_t, kMaxVertices> cur{};
    std::array<std::uint64_t, kMaxVertices> best{};
    std::array<bool, kMaxVertices> used{};
    bool has_best = false;

    CanonicalSearch(const Graph& graph, std::uint64_t node_budget)
        : g(graph), n(graph.vertex_count()), budget(node_budget)
    {
        cells = refine_cells(g);
        cell_of_pos.reserve(n);
        for (int c = 0; c < static_cast<int>(cells.size()); ++c)
            for (std::size_t i = 0; i < cells[c].size(); ++i)
                cell_of_pos.push_back(c);
    }

    // Returns true if best was replaced in this subtree; the caller's prefix
    // then equals the new best prefix exactly.
    bool dfs(int p, bool tied)
    {
        if (p == n) {
            if (has_best && tied)
                return false;
            std::copy(cur.begin(), cur.begin() + n, best.begin());
            has_best = true;
            return true;
        }

        bool updated = false;
        for (int v : cells[cell_of_pos[p]]) {
            if (used[v])
                continue;
            if (++nodes > budget)
                throw BudgetExceeded("canonical_form", nodes);

            std::uint64_t col = colbits[v];
            bool child_tied = false;
            if (has_best && tied) {
                std::uint64_t diff = col ^ best[p];
                if (diff == 0) {
                    child_tied = true;
                } else if ((col >> std::countr_zero(diff)) & 1) {
                    continue; // greater than best at the earliest differing bit
                }
            }

            used[v] = true;
            cur[p] = col;
            for (int u : g.neighbors(v))
                colbits[u] |= std::uint64_t{1} << p;

            if (dfs(p + 1, child_tied)) {
                updated = true;
                tied = true;
            }

            for (int u : g.neighbors(v))
                colbits[u] &= ~(std::uint64_t{1} << p);
            used[v] = false;
        }
        return updated;
    }
};

Certificate pack_certificate(int n, const std::array<std::uint64_t, kMaxVertices>& cols)
{
    Certificate cert;
    cert.n = n;
    int total_bits = n * (n - 1) / 2;
    cert.words.assign((total_bits + 63) / 64, 0);
    int t = 0;
    for (int p = 1; p < n; ++p) {
        for (int q = 0; q < p; ++q, ++t) {
            if ((cols[p] >> q) & 1)
                cert.words[t / 64] |= std::uint64_t{1} << (63 - t % 64);
        }
    }
    return cert;
}

Certificate uniform_certificate(int n, bool ones)
{
    std::array<std::uint64_t, kMaxVertices> cols{};
    if (ones)
        for (int p = 0; p < n; ++p)
            cols[p] = (std::uint64_t{1} << p) - 1;
    return pack_certificate(n, cols);
}

} // namespace

Certificate canonical_form(const Graph& g, std::uint64_t node_budget)
{
    int n = g.vertex_count();
    if (n <= 1)
        return Certificate{n, {}};

    // Complete and empty graphs admit exactly one bit string but n! tied
    // orderings; skip the walk.
    int m = g.edge_count();
    if (m == 0)
        return uniform_certificate(n, false);
    if (m == n * (n - 1) / 2)
        return uniform_certificate(n, true);

    CanonicalSearch search(g, node_budget);
    search.dfs(0, true);
    return pack_certificate(n, search.best);
}

std::vector<Graph> enumerate_graphs(int n, int hard_cap, std::uint64_t node_budget)
{
    if (hard_cap < 0 || hard_cap > kMaxVertices)
        throw std::invalid_argument("enumeration cap out of range");
    if (n < 0 || n > hard_cap)
        throw std::invalid_argument("enumerate_graphs: n = " + std::to_string(n)
                                    + " exceeds cap " + std::to_string(hard_cap));
    if (n == 0)
        return {Graph()};

    std::map<Certificate, Graph> reps;
    Graph k1 = build_graph(1, {});
    reps.emplace(canonical_form(k1, node_budget), k1);

    for (int m = 1; m < n; ++m) {
        std::map<Certificate, Graph> next;
        for (const auto& [cert, g] : reps) {
            std::vector<Edge> base = g.edges();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                std::vector<Edge> edges = base;
                for (int v : VertexSet(mask))
                    edges.emplace_back(v, m);
                Graph h = build_graph(m + 1, edges);
                next.emplace(canonical_form(h, node_budget), h);
            }
        }
        reps = std::move(next);
    }

    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [cert, g] : reps)
        out.push_back(g);
    return out;
}

Graph random_graph(int n, double p, std::uint64_t seed)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("random_graph: order out of range");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("random_graph: probability must lie in [0, 1]");

    SplitMix64 rng(seed);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < p)
                b.add_edge(i, j);
    return b.build();
}

} // namespace bk
