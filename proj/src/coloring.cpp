#include "bk/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace bk {

namespace {

std::uint64_t fresh_version()
{
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

} // namespace

Coloring::Coloring(int n, int palette)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("coloring size out of range");
    if (palette < 0)
        throw std::invalid_argument("palette size must be nonnegative");
    colors_.assign(n, kUncolored);
    palette_ = palette;
    version_ = fresh_version();
}

Coloring Coloring::from_assignment(std::vector<int> colors, int palette)
{
    Coloring c(static_cast<int>(colors.size()), palette);
    for (std::size_t v = 0; v < colors.size(); ++v)
        if (colors[v] != kUncolored && (colors[v] < 0 || colors[v] >= palette))
            throw std::invalid_argument("color " + std::to_string(colors[v]) + " at vertex "
                                        + std::to_string(v) + " outside palette");
    c.colors_ = std::move(colors);
    return c;
}

void Coloring::touch() { version_ = fresh_version(); }

void Coloring::set(int v, int c)
{
    if (v < 0 || v >= size())
        throw std::invalid_argument("set: vertex out of range");
    if (c < 0 || c >= palette_)
        throw std::invalid_argument("set: color " + std::to_string(c) + " outside palette of "
                                    + std::to_string(palette_));
    colors_[v] = c;
    touch();
}

void Coloring::clear(int v)
{
    if (v < 0 || v >= size())
        throw std::invalid_argument("clear: vertex out of range");
    colors_[v] = kUncolored;
    touch();
}

bool Coloring::total() const
{
    for (int c : colors_)
        if (c == kUncolored)
            return false;
    return true;
}

int Coloring::assigned_count() const
{
    int count = 0;
    for (int c : colors_)
        count += (c != kUncolored);
    return count;
}

int Coloring::distinct_colors() const
{
    std::vector<int> used;
    for (int c : colors_)
        if (c != kUncolored)
            used.push_back(c);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return static_cast<int>(used.size());
}

std::uint64_t Coloring::content_hash() const
{
    // splitmix-style mix over (palette, colors...)
    auto mix = [](std::uint64_t h, std::uint64_t x) {
        std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(0, static_cast<std::uint64_t>(palette_));
    for (int c : colors_)
        h = mix(h, static_cast<std::uint64_t>(c + 1));
    return h;
}

bool is_proper(const Graph& g, const Coloring& c)
{
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("coloring size does not match graph order");
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!c.assigned(u))
            continue;
        for (int v : g.neighbors(u))
            if (v > u && c.assigned(v) && c.color(v) == c.color(u))
                return false;
    }
    return true;
}

} // namespace bk
