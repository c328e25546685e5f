#pragma once

#include <cstdint>
#include <vector>

#include "stratmc/mesh.hpp"

namespace stratmc {

/// Integer per-stratum sample counts for one sampling pass.
struct AllocationPlan {
    std::vector<std::int64_t> counts; ///< one per stratum, each >= the clamp floor
    double normalizer = 0.0;          ///< sum(measure_i * sigma_i) / total; 0 when unused
    std::int64_t requested_total = 0;
    std::int64_t actual_total = 0; ///< sum of counts; may exceed requested after clamping
};

/// Counts proportional to stratum measures: real targets total*measure_i are
/// integerized by largest-remainder (ties to the lower index) so they sum to
/// total exactly, then each count is raised to at least min_points.
AllocationPlan proportional_allocation(const Mesh& mesh, std::int64_t total,
                                       std::int64_t min_points);

/// Variance-minimizing counts: targets measure_i * sigma_i / normalizer with
/// normalizer = sum(measure_i * sigma_i) / total, integerized and clamped the
/// same way. Requires populated moments; falls back to proportional
/// allocation when every stratum has zero variance.
AllocationPlan optimal_allocation(const Mesh& mesh, std::int64_t total,
                                  std::int64_t min_points);

} // namespace stratmc
