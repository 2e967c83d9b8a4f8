#include "bk/reference.hpp"

#include <algorithm>
#include <vector>

namespace bk::reference {

namespace {

bool matches(const Graph& g, const Graph& pattern, const std::vector<int>& subset,
             const std::vector<int>& perm)
{
    int k = pattern.vertex_count();
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (pattern.adjacent(a, b) != g.adjacent(subset[perm[a]], subset[perm[b]]))
                return false;
    return true;
}

} // namespace

bool has_induced(const Graph& g, const Graph& pattern)
{
    int n = g.vertex_count();
    int k = pattern.vertex_count();
    if (k > n)
        return false;
    if (k == 0)
        return true;

    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i)
        subset[i] = i;

    for (;;) {
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i)
            perm[i] = i;
        do {
            if (matches(g, pattern, subset, perm))
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));

        // next k-combination of {0..n-1} in ascending order
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i)
            --i;
        if (i < 0)
            return false;
        ++subset[i];
        for (int j = i + 1; j < k; ++j)
            subset[j] = subset[j - 1] + 1;
    }
}

} // namespace bk::reference
