#pragma once

#include "bk/graph.hpp"

#include <cstdint>
#include <vector>

namespace bk {

inline constexpr int kUncolored = -1;

// Partial or total vertex coloring over palette {0, ..., k-1}. Every mutation
// takes a globally fresh version number, so data derived from a snapshot
// (Kempe components in particular) can detect it has gone stale.
class Coloring {
public:
    Coloring() = default;
    Coloring(int n, int palette);

    // validates every entry is kUncolored or within [0, palette)
    static Coloring from_assignment(std::vector<int> colors, int palette);

    int size() const { return static_cast<int>(colors_.size()); }
    int palette() const { return palette_; }
    bool assigned(int v) const { return colors_[v] != kUncolored; }
    int color(int v) const { return colors_[v]; }
    const std::vector<int>& assignment() const { return colors_; }

    void set(int v, int c);
    void clear(int v);

    bool total() const;
    int assigned_count() const;
    int distinct_colors() const;

    std::uint64_t version() const { return version_; }
    std::uint64_t content_hash() const;

    // content equality; versions are bookkeeping, not state
    bool operator==(const Coloring& other) const
    {
        return palette_ == other.palette_ && colors_ == other.colors_;
    }

private:
    void touch();

    std::vector<int> colors_;
    int palette_ = 0;
    std::uint64_t version_ = 0;
};

// true iff no edge joins two equal assigned colors; unassigned endpoints
// never conflict
bool is_proper(const Graph& g, const Coloring& c);

} // namespace bk
