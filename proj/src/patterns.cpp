#include "bk/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace bk {

namespace {

struct PatternInfo {
    const char* name;
    Graph graph;
    std::vector<int> order; // search order: degree descending, index ascending
};

std::vector<int> search_order(const Graph& g)
{
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

PatternInfo make_info(const char* name, int n, const std::vector<Edge>& edges)
{
    PatternInfo info{name, build_graph(n, edges), {}};
    info.order = search_order(info.graph);
    return info;
}

const std::array<PatternInfo, kAllPatterns.size()>& table()
{
    static const std::array<PatternInfo, kAllPatterns.size()> t = {
        make_info("claw", 4, {{0, 1}, {0, 2}, {0, 3}}),
        make_info("c4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
        make_info("p3", 3, {{0, 1}, {1, 2}}),
        make_info("p4", 4, {{0, 1}, {1, 2}, {2, 3}}),
        make_info("p5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
        make_info("chair", 5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}),
        make_info("p4+k1", 5, {{0, 1}, {1, 2}, {2, 3}}),
        make_info("p3+k1", 4, {{0, 1}, {1, 2}}),
        make_info("k2+2k1", 4, {{0, 1}}),
        make_info("3k1", 3, {}),
    };
    return t;
}

const PatternInfo& info(Pattern p) { return table()[static_cast<std::size_t>(p)]; }

} // namespace

const Graph& pattern_graph(Pattern p) { return info(p).graph; }

std::string_view pattern_name(Pattern p) { return info(p).name; }

std::optional<Pattern> pattern_from_name(std::string_view name)
{
    for (Pattern p : kAllPatterns)
        if (pattern_name(p) == name)
            return p;
    return std::nullopt;
}

bool validate_embedding(const Graph& g, Pattern p, const Embedding& emb)
{
    const Graph& pat = pattern_graph(p);
    int k = pat.vertex_count();
    if (static_cast<int>(emb.size()) != k)
        return false;
    VertexSet seen;
    for (int host : emb) {
        if (host < 0 || host >= g.vertex_count() || seen.contains(host))
            return false;
        seen.add(host);
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (pat.adjacent(a, b) != g.adjacent(emb[a], emb[b]))
                return false;
    return true;
}

std::optional<Embedding> find_induced(const Graph& g, Pattern p)
{
    const PatternInfo& pi = info(p);
    const Graph& pat = pi.graph;
    int k = pat.vertex_count();
    int n = g.vertex_count();
    if (k > n)
        return std::nullopt;

    std::array<int, 5> assigned{}; // by search position
    VertexSet used;

    // Candidates at depth t: intersect, over earlier pattern vertices, the
    // neighborhood or the non-neighborhood of their images. Word ops keep
    // this cheap even on 62-vertex hosts.
    auto dfs = [&](auto&& self, int t) -> bool {
        if (t == k)
            return true;
        int x = pi.order[t];
        VertexSet candidates = g.vertices() - used;
        for (int s = 0; s < t && !candidates.empty(); ++s) {
            int y = pi.order[s];
            int h = assigned[s];
            if (pat.adjacent(x, y))
                candidates = candidates & g.neighbors(h);
            else
                candidates = candidates - g.neighbors(h);
        }
        for (int cand : candidates) {
            assigned[t] = cand;
            used.add(cand);
            if (self(self, t + 1))
                return true;
            used.remove(cand);
        }
        return false;
    };

    if (!dfs(dfs, 0))
        return std::nullopt;

    Embedding emb(k);
    for (int t = 0; t < k; ++t)
        emb[pi.order[t]] = assigned[t];
    if (!validate_embedding(g, p, emb))
        throw std::logic_error("find_induced produced an invalid witness");
    return emb;
}

bool is_free(const Graph& g, Pattern p) { return !find_induced(g, p).has_value(); }

std::optional<DenseWitness> find_dense_violation(const Graph& g, int t)
{
    if (t < 0)
        throw std::invalid_argument("dense_neighborhoods: t must be nonnegative");
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            VertexSet excess = g.neighbors(u) - g.neighbors(v) - VertexSet::single(v);
            if (excess.count() > t)
                return DenseWitness{u, v, excess};
        }
    }
    return std::nullopt;
}

bool dense_neighborhoods(const Graph& g, int t) { return !find_dense_violation(g, t).has_value(); }

bool dense_neighborhoods_at_max_degree(const Graph& g, int t)
{
    if (t < 0)
        throw std::invalid_argument("dense_neighborhoods: t must be nonnegative");
    if (g.vertex_count() == 0)
        return true;
    int delta = degree_profile(g).max_degree;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) != delta)
            continue;
        bool ok = true;
        for (int v : g.neighbors(u)) {
            VertexSet excess = g.neighbors(u) - g.neighbors(v) - VertexSet::single(v);
            if (excess.count() > t) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

ClassMembership classify_graph(const Graph& g, int dense_t)
{
    ClassMembership m;
    for (Pattern p : kAllPatterns) {
        auto idx = static_cast<std::size_t>(p);
        m.witness[idx] = find_induced(g, p);
        m.free_of[idx] = !m.witness[idx].has_value();
    }
    m.dense_violation = find_dense_violation(g, dense_t);
    m.dense3 = !m.dense_violation.has_value();
    m.dense3_max_degree = dense_neighborhoods_at_max_degree(g, dense_t);
    return m;
}

} // namespace bk
