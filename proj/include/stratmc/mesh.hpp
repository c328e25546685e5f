#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stratmc/geometry.hpp"

namespace stratmc {

/// Empirical moments of integrand values drawn in one stratum.
/// sigma2 is the biased 1/n sample variance, clamped to >= 0.
struct StratumMoments {
    std::int64_t count = 0;
    double mean = 0.0;
    double sigma2 = 0.0;
};

struct Stratum {
    HyperRect rect;
    std::int64_t n = 0; ///< allocated sample count
    int depth = 0;      ///< splits applied since the initial grid
    std::optional<StratumMoments> moments;
};

/// An exact partition of [0,1)^dim into strata.
struct Mesh {
    int dim = 0;
    std::vector<Stratum> strata;

    /// Regular grid with `segments` equal pieces per side (segments^dim strata).
    static Mesh uniform_grid(int dim, int segments);

    std::size_t size() const noexcept { return strata.size(); }

    /// Compensated (Neumaier) sum of stratum measures; 1 for a valid partition.
    double total_measure() const noexcept;

    /// Number of strata containing x; exactly 1 for a valid partition.
    int locate_count(std::span<const double> x) const noexcept;
};

} // namespace stratmc
