#pragma once

#include <cstdint>

namespace stratmc {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer (Steele/Lea/Flood); bijective on 64-bit integers.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Top 53 bits of x mapped to a double in [0, 1).
constexpr double unit_from_bits(std::uint64_t x) noexcept {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

/// Counter-based uniform generator. Draw i of a stream is
/// mix64(base + i * gamma), so any contiguous range of draws can be produced
/// in bulk or out of order and still match sequential generation exactly.
///
/// Distinct (seed, stream_id) pairs give statistically independent streams;
/// a whole run is reproducible from the root seed alone as long as stream ids
/// are assigned deterministically.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : base_(derive_base(seed, stream_id)) {}

    std::uint64_t next_u64() noexcept { return mix64(base_ + (counter_++) * kGoldenGamma); }
    double next_unit() noexcept { return unit_from_bits(next_u64()); }

    /// Advance the counter without generating (bulk paths account for their draws).
    void skip(std::uint64_t n) noexcept { counter_ += n; }

    std::uint64_t base() const noexcept { return base_; }
    std::uint64_t counter() const noexcept { return counter_; }

    static constexpr std::uint64_t derive_base(std::uint64_t seed, std::uint64_t stream_id) noexcept {
        return mix64(mix64(seed + kGoldenGamma) ^ mix64(stream_id + 0xD1B54A32D192ED03ULL));
    }

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

} // namespace stratmc
