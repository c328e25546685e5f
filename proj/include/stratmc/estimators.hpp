#pragma once

#include <cstdint>

#include "stratmc/integrand.hpp"
#include "stratmc/mesh.hpp"
#include "stratmc/rng.hpp"

namespace stratmc {

struct CrudeResult {
    double estimate = 0.0;
    double sigma2 = 0.0; ///< biased 1/n sample variance of the drawn values
};

/// Plain Monte Carlo over the unit cube with n >= 2 samples.
CrudeResult crude_mc(const Integrand& f, std::int64_t n, RngStream& rng);

/// Sum of measure * mean over a fully sampled mesh.
double stratified_estimate(const Mesh& mesh);

/// One stratum's contribution to the estimator variance: measure^2 * sigma2 / count.
/// Shared between the variance estimate and the refinement indicators so the
/// two sums agree bit-for-bit.
inline double stratum_variance_term(double measure, double sigma2, double count) noexcept {
    return measure * measure * sigma2 / count;
}

/// Sum of stratum_variance_term over a fully sampled mesh, using each
/// stratum's allocated count.
double stratified_variance_estimate(const Mesh& mesh);

} // namespace stratmc
