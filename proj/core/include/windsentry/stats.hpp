#pragma once

#include <cstddef>
#include <vector>

namespace windsentry {

// Interpolated quantile of a sample, equivalent to the common "type 7"
// estimator: with the sample sorted ascending and h = (n - 1) * q, the
// result is x[floor(h)] + frac(h) * (x[floor(h)+1] - x[floor(h)]).
// Throws std::invalid_argument on an empty sample or q outside [0, 1].
// The input is copied; the caller's vector is left untouched.
double interpolated_quantile(std::vector<double> values, double q);

double mean(const std::vector<double>& values);

// Sample standard deviation (n - 1 denominator). Returns 0 for n < 2.
double sample_stddev(const std::vector<double>& values);

}  // namespace windsentry
