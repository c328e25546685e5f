#pragma once

// Scalar cores shared by the reference kernels and the SIMD tails. Any change
// here changes the definition of "correct" for every backend.

#include <cstddef>
#include <cstdint>

#include "stratmc/kernels.hpp"
#include "stratmc/rng.hpp"

namespace stratmc::kernels::detail {

inline void fill_uniform_axis_range(std::uint64_t base, std::uint64_t ctr0, std::uint64_t stride,
                                    std::size_t j0, std::size_t j1, double lo, double width,
                                    double hi, double hi_below, double* out) {
    std::uint64_t c = ctr0 + j0 * stride;
    for (std::size_t j = j0; j < j1; ++j, c += stride) {
        const double u = unit_from_bits(mix64(base + c * kGoldenGamma));
        const double x = lo + u * width;
        // lo + u*width can round up to hi when width itself rounded up;
        // membership is half-open so pin such draws just below hi.
        out[j] = (x >= hi) ? hi_below : x;
    }
}

inline void accumulate_sum_sq_range(const double* v, std::size_t j0, std::size_t j1,
                                    double sum[8], double sumsq[8]) {
    for (std::size_t j = j0; j < j1; ++j) {
        const double x = v[j];
        sum[j & 7] += x;
        sumsq[j & 7] += x * x;
    }
}

inline void disc_indicator_range(const double* xs, const double* ys, std::size_t j0,
                                 std::size_t j1, double* out) {
    for (std::size_t j = j0; j < j1; ++j) {
        const double r2 = xs[j] * xs[j] + ys[j] * ys[j];
        out[j] = (r2 <= 1.0) ? 1.0 : 0.0;
    }
}

inline void radius_sq_range(const double* const* cols, int dim, std::size_t j0, std::size_t j1,
                            double* out) {
    const double* c0 = cols[0];
    for (std::size_t j = j0; j < j1; ++j) out[j] = c0[j] * c0[j];
    for (int k = 1; k < dim; ++k) {
        const double* ck = cols[k];
        for (std::size_t j = j0; j < j1; ++j) out[j] += ck[j] * ck[j];
    }
}

const Ops& scalar_table() noexcept;
#if defined(STRATMC_HAVE_AVX2)
const Ops& avx2_table() noexcept;
#endif

} // namespace stratmc::kernels::detail
