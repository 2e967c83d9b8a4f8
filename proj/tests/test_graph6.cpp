#include "bk/enumerate.hpp"
#include "bk/families.hpp"
#include "bk/graph6.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>

using namespace bk;

TEST_SUITE("graph6") {

TEST_CASE("known encodings decode to the right graphs")
{
    // "D??" is the empty graph on 5 vertices, "A_" is K2
    Graph e5 = parse_graph6("D??");
    CHECK(e5.vertex_count() == 5);
    CHECK(e5.edge_count() == 0);

    Graph k2 = parse_graph6("A_");
    CHECK(k2 == complete(2));

    CHECK(parse_graph6("?").vertex_count() == 0);
    CHECK(parse_graph6("Dhc") == cycle(5));
    CHECK(parse_graph6("DQc") == build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
}

TEST_CASE("encodings match the reference strings")
{
    CHECK(write_graph6(complete(2)) == "A_");
    CHECK(write_graph6(build_graph(5, {})) == "D??");
    CHECK(write_graph6(cycle(5)) == "Dhc");
    CHECK(write_graph6(Graph()) == "?");
    CHECK(write_graph6(complete(5)) == "D~{");
}

TEST_CASE("round trip is the identity on every small graph")
{
    for (int n = 0; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            std::string s = write_graph6(g);
            CHECK(parse_graph6(s) == g);
        }
    Graph pete = testutil::petersen();
    CHECK(parse_graph6(write_graph6(pete)) == pete);
    CHECK(parse_graph6(write_graph6(complete(62))) == complete(62));
}

TEST_CASE("malformed input is rejected with detail")
{
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D?"), std::invalid_argument);    // truncated
    CHECK_THROWS_AS(parse_graph6("D???"), std::invalid_argument);  // trailing garbage
    CHECK_THROWS_AS(parse_graph6("D??\x01"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);   // long form
    CHECK_THROWS_AS(parse_graph6(" D??"), std::invalid_argument);
}

TEST_CASE("padding bits are checked")
{
    // n=3 uses 3 of 6 payload bits; "Bw" sets all six
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK_THROWS_AS(parse_graph6("B~"), std::invalid_argument);
}

TEST_CASE("writer refuses graphs past the format limit")
{
    CHECK_THROWS_AS(write_graph6(complete(63)), std::invalid_argument);
}

} // TEST_SUITE("graph6")
