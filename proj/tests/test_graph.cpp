#include "bk/enumerate.hpp"
#include "bk/families.hpp"
#include "bk/graph.hpp"
#include "bk/prng.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bk;

TEST_SUITE("graph") {

TEST_CASE("builder rejects loops, bad endpoints and bad orders")
{
    CHECK_THROWS_AS(GraphBuilder(65), std::invalid_argument);
    CHECK_THROWS_AS(GraphBuilder(-1), std::invalid_argument);

    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(-1, 2), std::invalid_argument);
}

TEST_CASE("duplicate and reversed edges collapse")
{
    Graph g = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("degree profile on the standard suspects")
{
    CHECK(degree_profile(Graph()).max_degree == 0);
    CHECK(degree_profile(build_graph(3, {})).max_degree == 0);

    DegreeProfile k10 = degree_profile(complete(10));
    CHECK(k10.max_degree == 9);
    for (int d : k10.degrees)
        CHECK(d == 9);

    DegreeProfile star = degree_profile(complete_multipartite({1, 9})); // K_{1,9}
    CHECK(star.max_degree == 9);
    CHECK(star.degrees[0] == 9);
    for (int v = 1; v < 10; ++v)
        CHECK(star.degrees[v] == 1);

    for (int d : degree_profile(cycle(5)).degrees)
        CHECK(d == 2);
}

TEST_CASE("induced subgraphs relabel in ascending order")
{
    Graph c5 = cycle(5);
    CHECK(induced_subgraph(c5, c5.vertices()) == c5);

    Graph p = induced_subgraph(c5, VertexSet(0b111)); // vertices {0,1,2}
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(p.adjacent(0, 1));
    CHECK(p.adjacent(1, 2));
    CHECK(!p.adjacent(0, 2));

    CHECK(induced_subgraph(c5, VertexSet{}).vertex_count() == 0);
    CHECK_THROWS_AS(induced_subgraph(p, VertexSet(0b11111)), std::invalid_argument);

    // induced K4 inside K6
    Graph k4 = induced_subgraph(complete(6), VertexSet(0b101101));
    CHECK(k4 == complete(4));
}

TEST_CASE("complement is an involution and flips density")
{
    CHECK(complement(complete(5)).edge_count() == 0);
    CHECK(complement(build_graph(3, {})) == complete(3));

    SplitMix64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(1 + static_cast<int>(rng.next_below(20)), 0.5, rng.next());
        CHECK(complement(complement(g)) == g);
        int n = g.vertex_count();
        CHECK(g.edge_count() + complement(g).edge_count() == n * (n - 1) / 2);
    }

    // the pentagon is self-complementary
    CHECK(canonical_form(complement(cycle(5))) == canonical_form(cycle(5)));
}

TEST_CASE("lexicographic product follows its degree and adjacency laws")
{
    Graph g = lexicographic_product(cycle(5), complete(3));
    CHECK(g.vertex_count() == 15);
    for (int v = 0; v < 15; ++v)
        CHECK(g.degree(v) == 8);

    CHECK(lexicographic_product(cycle(5), complete(1)) == cycle(5));
    CHECK(lexicographic_product(complete(2), complete(2)) == complete(4));
    CHECK_THROWS_AS(lexicographic_product(complete(9), complete(8)), std::invalid_argument);

    SplitMix64 rng(7);
    for (int t = 0; t < 20; ++t) {
        Graph a = random_graph(5, 0.5, rng.next());
        Graph b = random_graph(3, 0.5, rng.next());
        Graph prod = lexicographic_product(a, b);
        REQUIRE(prod.vertex_count() == 15);
        for (int u = 0; u < 5; ++u)
            for (int x = 0; x < 3; ++x)
                CHECK(prod.degree(u * 3 + x) == 3 * a.degree(u) + b.degree(x));
        for (int u = 0; u < 5; ++u)
            for (int x = 0; x < 3; ++x)
                for (int v = 0; v < 5; ++v)
                    for (int y = 0; y < 3; ++y) {
                        if (u == v && x == y)
                            continue;
                        bool expect = a.adjacent(u, v) || (u == v && b.adjacent(x, y));
                        CHECK(prod.adjacent(u * 3 + x, v * 3 + y) == expect);
                    }
    }
}

TEST_CASE("connectivity")
{
    CHECK(is_connected(Graph()));
    CHECK(is_connected(complete(1)));
    CHECK(is_connected(cycle(5)));
    CHECK(!is_connected(build_graph(3, {})));
    CHECK(!is_connected(build_graph(5, {{0, 1}, {1, 2}, {2, 3}}))); // stray vertex 4
}

TEST_CASE("degree sum equals twice the edge count")
{
    SplitMix64 rng(99);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(1 + static_cast<int>(rng.next_below(30)), 0.4, rng.next());
        int sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("vertex sets iterate ascending")
{
    VertexSet s;
    s.add(5);
    s.add(1);
    s.add(63);
    std::vector<int> got;
    for (int v : s)
        got.push_back(v);
    CHECK(got == std::vector<int>{1, 5, 63});
    CHECK(s.count() == 3);
    CHECK(s.min() == 1);
    s.remove(1);
    CHECK(s.min() == 5);
    CHECK(VertexSet::first(3).bits() == 0b111);
    CHECK(VertexSet::first(64).count() == 64);
}

} // TEST_SUITE("graph")
