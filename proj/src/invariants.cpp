#include "bk/invariants.hpp"

#include "bk/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bk {

bool is_clique(const Graph& g, VertexSet s)
{
    if (!s.is_subset_of(g.vertices()))
        throw std::invalid_argument("is_clique: set contains vertices outside the graph");
    for (int v : s)
        if (!(s - g.neighbors(v) - VertexSet::single(v)).empty())
            return false;
    return true;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best_size = 0;
    VertexSet best;

    // Greedy coloring of the candidate set: any clique inside cand needs one
    // vertex per class, so the class count bounds what cand can still add.
    int bound(VertexSet cand) const
    {
        std::array<std::uint64_t, kMaxVertices> classes;
        int used = 0;
        for (int v : cand) {
            std::uint64_t nv = g.neighbors(v).bits();
            int c = 0;
            while (c < used && (classes[c] & nv))
                ++c;
            if (c == used)
                classes[used++] = 0;
            classes[c] |= std::uint64_t{1} << v;
        }
        return used;
    }

    void expand(VertexSet clique, VertexSet cand)
    {
        if (clique.count() > best_size) {
            best_size = clique.count();
            best = clique;
        }
        if (cand.empty())
            return;
        if (++nodes > budget)
            throw BudgetExceeded("max_clique", nodes);
        if (clique.count() + bound(cand) <= best_size)
            return;

        // branch on the candidate with most candidate-neighbors, lowest
        // index on ties; include first so deep cliques tighten the bound early
        int pick = -1, best_deg = -1;
        for (int v : cand) {
            int d = (g.neighbors(v) & cand).count();
            if (d > best_deg) {
                best_deg = d;
                pick = v;
            }
        }
        expand(clique | VertexSet::single(pick), cand & g.neighbors(pick));
        expand(clique, cand - VertexSet::single(pick));
    }
};

struct ColorSearch {
    const Graph& g;
    int n, k;
    std::uint64_t budget;
    std::uint64_t& nodes;
    std::array<std::uint64_t, kMaxVertices> forbidden{}; // per vertex: colors used by neighbors
    std::array<int, kMaxVertices> color{};
    int uncolored = 0;

    // used = number of colors opened so far; a step may reuse an open color
    // or open exactly the next one, which kills color-permutation symmetry
    bool solve(int used)
    {
        if (uncolored == 0)
            return true;

        int v = -1, best_sat = -1;
        for (int w = 0; w < n; ++w) {
            if (color[w] != kUncolored)
                continue;
            int sat = std::popcount(forbidden[w]);
            if (sat > best_sat) {
                best_sat = sat;
                v = w;
            }
        }

        int limit = std::min(used, k - 1);
        for (int c = 0; c <= limit; ++c) {
            if ((forbidden[v] >> c) & 1)
                continue;
            if (++nodes > budget)
                throw BudgetExceeded("k_colorable", nodes);

            color[v] = c;
            --uncolored;
            std::uint64_t changed = 0;
            for (int u : g.neighbors(v)) {
                if (color[u] == kUncolored && !((forbidden[u] >> c) & 1)) {
                    forbidden[u] |= std::uint64_t{1} << c;
                    changed |= std::uint64_t{1} << u;
                }
            }

            if (solve(used + (c == used ? 1 : 0)))
                return true;

            for (int u : VertexSet(changed))
                forbidden[u] &= ~(std::uint64_t{1} << c);
            color[v] = kUncolored;
            ++uncolored;
        }
        return false;
    }
};

std::optional<Coloring> solve_k(const Graph& g, int k, std::uint64_t budget, SearchStats& stats,
                                const CliqueResult* clique_hint)
{
    int n = g.vertex_count();
    if (k < 0)
        throw std::invalid_argument("k_colorable: negative k");
    if (n == 0)
        return Coloring(0, k);
    if (k == 0)
        return std::nullopt;

    int delta = degree_profile(g).max_degree;
    if (k >= delta + 1) {
        // greedy always lands within max degree + 1 colors
        Coloring c(n, k);
        for (int v = 0; v < n; ++v) {
            std::uint64_t taken = 0;
            for (int u : g.neighbors(v))
                if (c.assigned(u))
                    taken |= std::uint64_t{1} << c.color(u);
            c.set(v, std::countr_zero(~taken));
        }
        return c;
    }

    CliqueResult q;
    if (clique_hint) {
        q = *clique_hint;
    } else {
        q = max_clique(g, budget);
        stats.nodes += q.stats.nodes;
    }
    if (q.omega > k)
        return std::nullopt;

    // pre-color the clique: its vertices need pairwise distinct colors in
    // any solution, so fixing them 0..omega-1 loses nothing
    ColorSearch s{g, n, k, budget, stats.nodes, {}, {}, 0};
    s.color.fill(kUncolored);
    int used = 0;
    for (int v : q.witness)
        s.color[v] = used++;
    s.uncolored = n - used;
    for (int v = 0; v < n; ++v) {
        if (s.color[v] != kUncolored)
            continue;
        for (int u : g.neighbors(v))
            if (s.color[u] != kUncolored)
                s.forbidden[v] |= std::uint64_t{1} << s.color[u];
    }

    if (!s.solve(used))
        return std::nullopt;

    std::vector<int> out(s.color.begin(), s.color.begin() + n);
    Coloring c = Coloring::from_assignment(std::move(out), k);
    if (!c.total() || !is_proper(g, c))
        throw std::logic_error("k_colorable produced an improper witness");
    return c;
}

} // namespace

CliqueResult max_clique(const Graph& g, std::uint64_t node_budget)
{
    CliqueSearch s{g, node_budget};
    s.expand(VertexSet{}, g.vertices());
    CliqueResult r{s.best_size, s.best, {s.nodes}};
    if (!is_clique(g, r.witness) || r.witness.count() != r.omega)
        throw std::logic_error("max_clique produced an invalid witness");
    return r;
}

std::optional<Coloring> k_colorable(const Graph& g, int k, std::uint64_t node_budget)
{
    SearchStats stats;
    return solve_k(g, k, node_budget, stats, nullptr);
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget)
{
    SearchStats stats;
    CliqueResult q = max_clique(g, node_budget);
    stats.nodes += q.stats.nodes;
    for (int k = q.omega;; ++k) {
        if (k > g.vertex_count())
            throw std::logic_error("chromatic_number overran the trivial upper bound");
        auto c = solve_k(g, k, node_budget, stats, &q);
        if (c)
            return ChromaticResult{k, std::move(*c), stats};
    }
}

bool is_complete_graph(const Graph& g)
{
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_odd_cycle(const Graph& g)
{
    int n = g.vertex_count();
    if (n < 3 || n % 2 == 0)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2)
            return false;
    return is_connected(g);
}

bool brooks_check(const Graph& g, std::uint64_t node_budget)
{
    if (!is_connected(g))
        throw std::invalid_argument("brooks_check expects a connected graph");
    int chi = chromatic_number(g, node_budget).chi;
    return chi <= degree_profile(g).max_degree || is_complete_graph(g) || is_odd_cycle(g);
}

bool bk_holds(const Graph& g, std::uint64_t node_budget)
{
    ChromaticResult c = chromatic_number(g, node_budget);
    CliqueResult q = max_clique(g, node_budget);
    return c.chi <= std::max(q.omega, degree_profile(g).max_degree - 1);
}

} // namespace bk
