#pragma once

#include <cstdint>
#include <vector>

#include "stratmc/allocation.hpp"
#include "stratmc/integrand.hpp"
#include "stratmc/mesh.hpp"

namespace stratmc {

/// Per-stratum contributions to the estimator variance at one iteration.
struct IndicatorSet {
    std::vector<double> per_stratum;
    double total = 0.0; ///< sum of per_stratum
    double mean = 0.0;  ///< total / stratum count
};

struct AdaptiveConfig {
    std::int64_t total_points = 0; ///< global sample budget per iteration
    int max_iterations = 4;
    double variance_tol = 0.0;    ///< stop once the estimated variance drops to this
    double mark_factor = 2.0;     ///< refine strata above mark_factor * mean indicator; > 1
    std::int64_t min_points = 2;  ///< floor for any per-stratum count
    int grid_segments = 4;        ///< initial grid pieces per side
    int dim = 2;
    std::uint64_t seed = 0;
};

struct RunReport {
    double estimate = 0.0;
    int stop_level = 0;                 ///< completed refinement iterations
    std::vector<double> variance_trace; ///< estimated variance per iteration
    Mesh mesh_final;                    ///< last sampled mesh, moments populated
    AllocationPlan allocation_final;
    std::int64_t initial_discarded = 0; ///< budget remainder unused by the equal initial split
    double wall_time_s = 0.0;
};

struct EssayReport {
    double mean_estimate = 0.0;
    double variance_estimate = 0.0; ///< unbiased sample variance across essays
    std::vector<double> essays;
    double wall_time_s = 0.0;
    double efficiency = 0.0; ///< 1 / (wall_time_s * variance_estimate)
};

/// Indicator of stratum i: measure_i^2 * sigma2_i / counts[i]. total equals
/// stratified_variance_estimate bit-for-bit when counts match the mesh.
IndicatorSet indicators(const Mesh& mesh, const AllocationPlan& plan);

/// Indices with per_stratum[i] > mark_factor * mean, strictly. Ascending.
std::vector<std::size_t> mark(const IndicatorSet& ind, double mark_factor);

/// The 2^dim congruent children of s; each child gets
/// max(floor(s.n / 2^dim), min_points) points, depth s.depth + 1, and a copy
/// of the parent's moments (kept until the child is resampled).
std::vector<Stratum> split_stratum(const Stratum& s, std::int64_t min_points);

/// Replaces each marked stratum (ascending indices) in place by its children;
/// unmarked strata are untouched, so the partition is preserved.
void refine(Mesh& mesh, const std::vector<std::size_t>& marked, std::int64_t min_points);

/// Adaptive run: equal-allocation sampling of the initial grid, then up to
/// max_iterations rounds of optimal reallocation, fresh resampling, indicator
/// marking and 2^dim refinement, stopping early once the estimated variance
/// reaches variance_tol. Strata within a pass may be sampled on up to
/// `threads` threads; results are identical at any thread count.
RunReport run_adaptive(const AdaptiveConfig& cfg, const Integrand& f, int threads = 1);

/// Replication study: one adaptive run freezes the mesh and counts, then
/// n_essays - 1 fresh resamplings of the frozen mesh give independent
/// estimates. Reports their mean, unbiased variance, and efficiency.
EssayReport run_essays(const AdaptiveConfig& cfg, int n_essays, const Integrand& f,
                       int threads = 1);

/// Crude-MC counterpart of run_essays: n_essays independent plain MC runs at
/// the same budget, same statistics. The like-for-like baseline.
EssayReport crude_essays(std::int64_t total_points, int n_essays, const Integrand& f,
                         std::uint64_t seed, int threads = 1);

/// 1 / (wall_time_s * variance); +infinity when variance is 0.
double efficiency(double wall_time_s, double variance);

} // namespace stratmc
