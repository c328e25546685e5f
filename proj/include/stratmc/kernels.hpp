#pragma once

#include <cstddef>
#include <cstdint>

namespace stratmc::kernels {

enum class Backend { scalar, avx2 };

/// Inner-loop kernels. Every entry has a scalar reference implementation and
/// may have SIMD variants; all variants of one entry are bit-for-bit
/// equivalent, so backend selection never changes results.
struct Ops {
    /// out[j] = x in [lo, hi) drawn from stream draws ctr0 + j*stride:
    /// x = lo + u*width, clamped below hi (hi_below = largest double < hi).
    void (*fill_uniform_axis)(std::uint64_t base, std::uint64_t ctr0, std::uint64_t stride,
                              std::size_t n, double lo, double width, double hi,
                              double hi_below, double* out);

    /// Adds v[j] into sum[j mod 8] and v[j]^2 into sumsq[j mod 8].
    /// Chunked callers must keep chunk starts 8-aligned so stripes line up.
    void (*accumulate_sum_sq)(const double* v, std::size_t n, double sum[8], double sumsq[8]);

    /// out[j] = 1.0 if xs[j]^2 + ys[j]^2 <= 1, else 0.0.
    void (*disc_indicator_batch)(const double* xs, const double* ys, std::size_t n, double* out);

    /// out[j] = sum_k cols[k][j]^2, accumulated in axis order.
    void (*radius_sq_batch)(const double* const* cols, int dim, std::size_t n, double* out);
};

/// Active table; selected once from CPU features (overridable via the
/// STRATMC_BACKEND environment variable, values "scalar" or "avx2").
const Ops& ops() noexcept;

/// Table for a specific backend (equivalence tests); backend must be available.
const Ops& ops_for(Backend b);

Backend active_backend() noexcept;
bool backend_available(Backend b) noexcept;

/// Replace the active table; throws std::invalid_argument if unavailable.
/// Intended for tests and benchmarking, not for concurrent use.
void force_backend(Backend b);

/// Fixed combine order for the 8 stripe accumulators.
inline double combine_stripes(const double s[8]) noexcept {
    return ((s[0] + s[1]) + (s[2] + s[3])) + ((s[4] + s[5]) + (s[6] + s[7]));
}

} // namespace stratmc::kernels
