#include "bk/graph.hpp"

#include <stdexcept>
#include <string>

namespace bk {

int Graph::edge_count() const
{
    int total = 0;
    for (int v = 0; v < n_; ++v)
        total += degree(v);
    return total / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
    g_.n_ = n;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v)
{
    if (u < 0 || u >= g_.n_ || v < 0 || v >= g_.n_)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", "
                                    + std::to_string(v) + ")");
    if (u == v)
        throw std::invalid_argument("loop rejected at vertex " + std::to_string(u));
    g_.adj_[u].add(v);
    g_.adj_[v].add(u);
    return *this;
}

Graph build_graph(int n, const std::vector<Edge>& edges)
{
    GraphBuilder b(n);
    for (const auto& [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

DegreeProfile degree_profile(const Graph& g)
{
    DegreeProfile p;
    p.degrees.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        p.degrees[v] = g.degree(v);
        if (p.degrees[v] > p.max_degree)
            p.max_degree = p.degrees[v];
    }
    return p;
}

Graph induced_subgraph(const Graph& g, VertexSet s)
{
    if (!s.is_subset_of(g.vertices()))
        throw std::invalid_argument("induced_subgraph: set contains vertices outside the graph");

    // old label -> new label, ascending
    std::array<int, kMaxVertices> relabel{};
    int m = 0;
    for (int v : s)
        relabel[v] = m++;

    GraphBuilder b(m);
    for (int v : s)
        for (int u : g.neighbors(v) & s)
            if (v < u)
                b.add_edge(relabel[v], relabel[u]);
    return b.build();
}

Graph complement(const Graph& g)
{
    int n = g.vertex_count();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.vertices() - g.neighbors(u) - VertexSet::single(u))
            if (u < v)
                b.add_edge(u, v);
    return b.build();
}

Graph lexicographic_product(const Graph& g, const Graph& h)
{
    int ng = g.vertex_count();
    int nh = h.vertex_count();
    if (ng * nh > kMaxVertices)
        throw std::invalid_argument("lexicographic product exceeds 64 vertices");

    GraphBuilder b(ng * nh);
    for (int u = 0; u < ng; ++u) {
        for (int x = 0; x < nh; ++x) {
            // u = v case: copy edges of h within the block
            for (int y : h.neighbors(x))
                if (x < y)
                    b.add_edge(u * nh + x, u * nh + y);
            // uv edge case: full join between blocks
            for (int v : g.neighbors(u))
                if (u < v)
                    for (int y = 0; y < nh; ++y)
                        b.add_edge(u * nh + x, v * nh + y);
        }
    }
    return b.build();
}

bool is_connected(const Graph& g)
{
    int n = g.vertex_count();
    if (n == 0)
        return true;
    VertexSet reached = VertexSet::single(0);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier)
            next = next | g.neighbors(v);
        frontier = next - reached;
        reached = reached | next;
    }
    return reached == g.vertices();
}

} // namespace bk
