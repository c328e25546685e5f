#pragma once

#include <span>
#include <vector>

namespace stratmc {

/// Axis-aligned box inside the unit hypercube with half-open membership:
/// x is inside iff lower[k] <= x[k] < upper[k] for every axis k.
class HyperRect {
public:
    /// Validates 0 <= lower[k] < upper[k] <= 1 on every axis.
    HyperRect(std::vector<double> lower, std::vector<double> upper);

    static HyperRect unit_cube(int dim);

    int dim() const noexcept { return static_cast<int>(lower_.size()); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }

    /// Product of side lengths; in (0, 1].
    double measure() const noexcept;

    bool contains(std::span<const double> x) const noexcept;

    /// The 2^dim congruent children obtained by bisecting every axis at its
    /// midpoint. Child c takes the upper half of axis k iff bit k of c is set.
    std::vector<HyperRect> bisect_all_axes() const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

} // namespace stratmc
