#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stratmc/geometry.hpp"
#include "stratmc/integrand.hpp"
#include "stratmc/mesh.hpp"
#include "stratmc/rng.hpp"

namespace stratmc {

/// Axis-major batch of points inside one box: coords[k*n + j] is coordinate k
/// of point j.
struct PointBatch {
    int dim = 0;
    std::size_t n = 0;
    std::vector<double> coords;

    std::span<const double> axis(int k) const {
        return {coords.data() + static_cast<std::size_t>(k) * n, n};
    }
    void point(std::size_t j, std::span<double> out) const {
        for (int k = 0; k < dim; ++k) out[k] = coords[static_cast<std::size_t>(k) * n + j];
    }
};

/// k i.i.d. uniform points in rect; consumes k*dim draws from rng.
PointBatch sample_uniform(const HyperRect& rect, std::size_t k, RngStream& rng);

/// Mean and biased 1/n variance of a non-empty value list.
StratumMoments stratum_moments(std::span<const double> values);

/// Draws n uniform points in rect, evaluates f, and returns their moments.
/// Streams in blocks through the kernel path; consumes n*dim draws.
StratumMoments sample_box_moments(const HyperRect& rect, std::int64_t n, const Integrand& f,
                                  RngStream& rng);

/// sample_box_moments applied to a stratum, storing the result in s.moments.
void sample_stratum(Stratum& s, const Integrand& f, RngStream& rng);

} // namespace stratmc
