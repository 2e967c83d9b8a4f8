#include "bk/graph6.hpp"

#include <stdexcept>
#include <string>

namespace bk {

Graph parse_graph6(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of printable range");

    if (text[0] == 126) // '~' starts the multi-byte size forms
        throw std::invalid_argument("graph6: long size form (n > 62) not supported");
    int n = text[0] - 63;

    int bits = n * (n - 1) / 2;
    std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected)
        throw std::invalid_argument("graph6: expected " + std::to_string(expected)
                                    + " bytes for n = " + std::to_string(n) + ", got "
                                    + std::to_string(text.size()));

    GraphBuilder b(n);
    int t = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++t) {
            int bit = ((text[1 + t / 6] - 63) >> (5 - t % 6)) & 1;
            if (bit)
                b.add_edge(i, j);
        }
    }
    // padding bits must be zero
    for (; t < 6 * static_cast<int>(expected - 1); ++t)
        if (((text[1 + t / 6] - 63) >> (5 - t % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");

    return b.build();
}

std::string write_graph6(const Graph& g)
{
    int n = g.vertex_count();
    if (n > kGraph6MaxVertices)
        throw std::invalid_argument("graph6: short form holds at most 62 vertices, got "
                                    + std::to_string(n));

    int bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, char(63));
    out[0] = static_cast<char>(63 + n);
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.adjacent(i, j))
                out[1 + t / 6] += char(1 << (5 - t % 6));
    return out;
}

} // namespace bk
