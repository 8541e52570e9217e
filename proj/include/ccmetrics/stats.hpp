#ifndef CCMETRICS_STATS_HPP
#define CCMETRICS_STATS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ccmetrics {

struct SampleSeries {
    std::vector<double> values;
    std::string label;
};

struct RegressionLine {
    double slope = 0;
    double intercept = 0;
    double r = 0;          // in [-1, 1]
    double r_squared = 0;  // r * r
    std::size_t n = 0;
};

// Pearson product-moment correlation, two-pass (means first, then centered
// sums), summed left to right for reproducibility. A constant series makes
// r undefined and raises ZeroVariance; it is never reported as 0.
double pearson(const SampleSeries& xs, const SampleSeries& ys);

// Ordinary least squares y = slope*x + intercept. ZeroVariance applies to
// xs only; a constant ys yields slope 0 with r = 0 by convention.
RegressionLine regress(const SampleSeries& xs, const SampleSeries& ys);

}  // namespace ccmetrics

#endif
