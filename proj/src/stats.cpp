#include "ccmetrics/stats.hpp"

#include <algorithm>
#include <cmath>

#include "ccmetrics/errors.hpp"

namespace ccmetrics {

namespace {

struct CenteredSums {
    double sxx = 0;
    double syy = 0;
    double sxy = 0;
    double mean_x = 0;
    double mean_y = 0;
    std::size_t n = 0;
};

CenteredSums centered_sums(const SampleSeries& xs, const SampleSeries& ys) {
    if (xs.values.size() != ys.values.size()) {
        throw MetricsError(ErrorKind::LengthMismatch,
                           "series lengths differ: " + xs.label + " has " +
                               std::to_string(xs.values.size()) + ", " +
                               ys.label + " has " +
                               std::to_string(ys.values.size()));
    }
    CenteredSums s;
    s.n = xs.values.size();
    if (s.n < 2) {
        throw MetricsError(ErrorKind::InsufficientData,
                           "need at least 2 samples, got " +
                               std::to_string(s.n));
    }
    double sum_x = 0, sum_y = 0;
    for (std::size_t i = 0; i < s.n; ++i) sum_x += xs.values[i];
    for (std::size_t i = 0; i < s.n; ++i) sum_y += ys.values[i];
    s.mean_x = sum_x / static_cast<double>(s.n);
    s.mean_y = sum_y / static_cast<double>(s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
        double dx = xs.values[i] - s.mean_x;
        double dy = ys.values[i] - s.mean_y;
        s.sxx += dx * dx;
        s.syy += dy * dy;
        s.sxy += dx * dy;
    }
    return s;
}

}  // namespace

double pearson(const SampleSeries& xs, const SampleSeries& ys) {
    CenteredSums s = centered_sums(xs, ys);
    if (s.sxx == 0 || s.syy == 0) {
        throw MetricsError(ErrorKind::ZeroVariance,
                           "correlation undefined: series '" +
                               (s.sxx == 0 ? xs.label : ys.label) +
                               "' is constant");
    }
    double r = s.sxy / std::sqrt(s.sxx * s.syy);
    return std::clamp(r, -1.0, 1.0);
}

RegressionLine regress(const SampleSeries& xs, const SampleSeries& ys) {
    CenteredSums s = centered_sums(xs, ys);
    if (s.sxx == 0) {
        throw MetricsError(ErrorKind::ZeroVariance,
                           "regression undefined: x series '" + xs.label +
                               "' is constant");
    }
    RegressionLine line;
    line.n = s.n;
    line.slope = s.sxy / s.sxx;
    line.intercept = s.mean_y - line.slope * s.mean_x;
    if (s.syy == 0) {
        line.r = 0;  // constant y: the mean line fits exactly
    } else {
        line.r = std::clamp(s.sxy / std::sqrt(s.sxx * s.syy), -1.0, 1.0);
    }
    line.r_squared = line.r * line.r;
    return line;
}

}  // namespace ccmetrics
