#pragma once

#include <functional>

namespace stratmc {

/// Composite Simpson rule over [a, b]; intervals must be even and positive.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

} // namespace stratmc
