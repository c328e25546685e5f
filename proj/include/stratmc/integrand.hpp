#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace stratmc {

/// A deterministic, side-effect-free map from [0,1)^dim to the reals.
class Integrand {
public:
    virtual ~Integrand() = default;

    virtual int dim() const noexcept = 0;

    virtual double value(std::span<const double> x) const = 0;

    /// Batch evaluation over axis-major columns: cols[k][j] is coordinate k of
    /// point j. The default gathers points and calls value(); built-ins
    /// override with kernel-backed loops.
    virtual void value_batch(const double* const* cols, std::size_t n, double* out) const;

    /// Known exact integral over [0,1)^dim, when available (error reporting).
    virtual std::optional<double> exact_integral() const { return std::nullopt; }
};

} // namespace stratmc
