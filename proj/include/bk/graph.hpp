#pragma once

#include "bk/vertexset.hpp"

#include <array>
#include <utility>
#include <vector>

namespace bk {

inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on at most 64 vertices. Neighborhoods
// are single-word vertex sets, so adjacency tests, degree counts and set
// algebra on neighborhoods are one or two machine ops.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::first(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].count(); }
    int edge_count() const;
    std::vector<Edge> edges() const; // lexicographic (u, v) with u < v

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Only way to construct a non-trivial Graph; keeps adjacency symmetric and
// loop-free by construction. Duplicate edges collapse silently.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(int u, int v);
    Graph build() const { return g_; }

private:
    Graph g_;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

struct DegreeProfile {
    std::vector<int> degrees; // indexed by vertex
    int max_degree = 0;       // 0 for the empty and null graphs
};

DegreeProfile degree_profile(const Graph& g);

// Subgraph induced on s (s must be within g's vertex range). Vertices are
// relabelled 0..|s|-1 preserving ascending order of the originals.
Graph induced_subgraph(const Graph& g, VertexSet s);

Graph complement(const Graph& g);

// Lexicographic product g[h]: vertex (u, x) -> u * |V(h)| + x, and
// (u, x) ~ (v, y) iff uv in E(g), or u = v and xy in E(h).
Graph lexicographic_product(const Graph& g, const Graph& h);

bool is_connected(const Graph& g); // the null graph counts as connected

} // namespace bk
