#pragma once

#include <span>

namespace rlroute {

// Linear-interpolation quantile (the "type 7" estimator); q in [0, 1].
// Requires a non-empty input.
double quantile(std::span<const double> values, double q);
double median(std::span<const double> values);
// Interquartile range, Q3 - Q1.
double iqr(std::span<const double> values);

}  // namespace rlroute
