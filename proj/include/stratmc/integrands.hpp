#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "stratmc/integrand.hpp"

namespace stratmc {

/// f(x) = c on [0,1)^dim; exact integral c.
class ConstantFn final : public Integrand {
public:
    ConstantFn(int dim, double c);
    int dim() const noexcept override { return dim_; }
    double value(std::span<const double> x) const override;
    void value_batch(const double* const* cols, std::size_t n, double* out) const override;
    std::optional<double> exact_integral() const override { return c_; }

private:
    int dim_;
    double c_;
};

/// f(x, y) = 1 if x^2 + y^2 <= 1 (inclusive), else 0; exact integral pi/4.
class DiscIndicatorFn final : public Integrand {
public:
    int dim() const noexcept override { return 2; }
    double value(std::span<const double> x) const override;
    void value_batch(const double* const* cols, std::size_t n, double* out) const override;
    std::optional<double> exact_integral() const override;
};

/// f(x) = exp(-alpha * |x|^2) with alpha > 0; exact integral computed as the
/// dim-th power of the one-axis Simpson quadrature.
class GaussianFn final : public Integrand {
public:
    GaussianFn(int dim, double alpha);
    int dim() const noexcept override { return dim_; }
    double alpha() const noexcept { return alpha_; }
    double value(std::span<const double> x) const override;
    void value_batch(const double* const* cols, std::size_t n, double* out) const override;
    std::optional<double> exact_integral() const override { return exact_; }

private:
    int dim_;
    double alpha_;
    double exact_;
};

/// integral of exp(-alpha t^2) over [0,1], composite Simpson with 10^6 intervals.
double gauss_axis_integral(double alpha);

/// A registry entry: resolved integrand plus its metadata.
struct NamedIntegrand {
    std::string name;
    int dim = 0;
    std::map<std::string, double> params;
    std::optional<double> exact;
    std::shared_ptr<const Integrand> fn;
};

/// Builds one of the built-in integrands. Names: const (param c, optional
/// dim), disc, gauss2d, gauss3d, gaussNd (param dim) — the gauss family takes
/// param alpha > 0. Unknown names raise an error listing the choices.
NamedIntegrand registry_lookup(const std::string& name,
                               const std::map<std::string, double>& params = {});

} // namespace stratmc
