#pragma once

// Test-side oracles: small, dumb, written straight off the definitions, and
// sharing no code path with the library's solvers. Expected values frozen in
// the tests were produced by these.

#include "bk/graph.hpp"
#include "bk/vertexset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline bool colorable_rec(const bk::Graph& g, std::vector<int>& col, int v, int k)
{
    if (v == g.vertex_count())
        return true;
    // vertex v never needs a color above v; plain first-fit recursion
    int limit = std::min(v, k - 1);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v)) {
            if (u < v && col[u] == c) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        col[v] = c;
        if (colorable_rec(g, col, v + 1, k))
            return true;
    }
    return false;
}

inline bool k_colorable(const bk::Graph& g, int k)
{
    if (g.vertex_count() == 0)
        return true;
    if (k <= 0)
        return false;
    std::vector<int> col(g.vertex_count(), -1);
    return colorable_rec(g, col, 0, k);
}

inline int chromatic_number(const bk::Graph& g)
{
    for (int k = 0;; ++k)
        if (oracle::k_colorable(g, k))
            return k;
}

// every subset, largest pairwise-adjacent one wins
inline int max_clique_size(const bk::Graph& g)
{
    int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bk::VertexSet s(mask);
        if (s.count() <= best)
            continue;
        bool clique = true;
        for (int v : s) {
            if (!(s - g.neighbors(v) - bk::VertexSet::single(v)).empty()) {
                clique = false;
                break;
            }
        }
        if (clique)
            best = s.count();
    }
    return best;
}

inline bool isomorphic(const bk::Graph& a, const bk::Graph& b)
{
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;

    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) {
                    match = false;
                    break;
                }
        if (match)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Isomorphism classes on n labeled vertices by orbit marking: walk all edge
// masks ascending; an unseen mask opens a class, then its entire permutation
// orbit is marked seen. Costs classes * n! remaps, nothing like the
// library's canonical search.
inline std::uint64_t count_isomorphism_classes(int n)
{
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_of(pairs);
    std::vector<std::vector<int>> index_of(n, std::vector<int>(n, -1));
    {
        int t = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++t) {
                pair_of[t] = {i, j};
                index_of[i][j] = index_of[j][i] = t;
            }
    }

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::vector<bool> seen(std::uint64_t{1} << pairs, false);
    std::uint64_t classes = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        if (seen[mask])
            continue;
        ++classes;
        for (const auto& perm : perms) {
            std::uint64_t image = 0;
            for (int t = 0; t < pairs; ++t) {
                if ((mask >> t) & 1) {
                    auto [i, j] = pair_of[t];
                    image |= std::uint64_t{1} << index_of[perm[i]][perm[j]];
                }
            }
            seen[image] = true;
        }
    }
    return classes;
}

} // namespace oracle
