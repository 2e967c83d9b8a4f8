#pragma once

#include <cstdint>

namespace bk {

// splitmix64 (Steele/Lea/Flood 2014, public domain). Picked over std::mt19937
// because the whole generator is four lines anyone can reproduce bit-for-bit
// in any language; stream identity matters more here than statistical muscle.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), top 53 bits of one draw
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
    // bounds used here (tens), so keep the mapping trivially portable.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Stable per-stream seed derivation so independent generators drawn from one
// user seed stay decoupled.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    SplitMix64 rng(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)));
    return rng.next();
}

} // namespace bk
