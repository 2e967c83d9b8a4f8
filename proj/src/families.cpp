#include "bk/families.hpp"

#include <stdexcept>
#include <string>

namespace bk {

Graph complete(int n)
{
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph cycle(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph path(int n)
{
    if (n < 1)
        throw std::invalid_argument("path needs at least one vertex");
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

Graph complete_multipartite(const std::vector<int>& part_sizes)
{
    int n = 0;
    for (int s : part_sizes) {
        if (s <= 0)
            throw std::invalid_argument("multipartite part sizes must be positive");
        n += s;
    }

    GraphBuilder b(n);
    int offset_u = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p) {
        int offset_v = offset_u + part_sizes[p];
        for (std::size_t q = p + 1; q < part_sizes.size(); ++q) {
            for (int i = 0; i < part_sizes[p]; ++i)
                for (int j = 0; j < part_sizes[q]; ++j)
                    b.add_edge(offset_u + i, offset_v + j);
            offset_v += part_sizes[q];
        }
        offset_u += part_sizes[p];
    }
    return b.build();
}

Graph line_graph(const Graph& g)
{
    std::vector<Edge> edges = g.edges();
    int m = static_cast<int>(edges.size());
    if (m > kMaxVertices)
        throw std::invalid_argument("line graph would have " + std::to_string(m)
                                    + " vertices, cap is 64");

    GraphBuilder b(m);
    for (int a = 0; a < m; ++a)
        for (int bb = a + 1; bb < m; ++bb) {
            auto [u1, v1] = edges[a];
            auto [u2, v2] = edges[bb];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                b.add_edge(a, bb);
        }
    return b.build();
}

} // namespace bk
