#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "ccmetrics/errors.hpp"
#include "ccmetrics/stats.hpp"

using namespace ccmetrics;

namespace {

SampleSeries series(std::vector<double> v, const char* label = "s") {
    return SampleSeries{std::move(v), label};
}

// definitional formula at extended precision, independent of the library path
long double oracle_r(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
    long double sx = 0, sy = 0;
    for (double v : xs) sx += v;
    for (double v : ys) sy += v;
    long double mx = sx / static_cast<long double>(xs.size());
    long double my = sy / static_cast<long double>(ys.size());
    long double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        long double dx = xs[i] - mx;
        long double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

long double oracle_slope(const std::vector<double>& xs,
                         const std::vector<double>& ys) {
    long double sx = 0, sy = 0;
    for (double v : xs) sx += v;
    for (double v : ys) sy += v;
    long double mx = sx / static_cast<long double>(xs.size());
    long double my = sy / static_cast<long double>(ys.size());
    long double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    return sxy / sxx;
}

}  // namespace

TEST_CASE("exact linear relationships") {
    CHECK(pearson(series({1, 2, 3}), series({2, 4, 6})) == 1.0);
    CHECK(pearson(series({1, 2, 3}), series({6, 4, 2})) == -1.0);
}

TEST_CASE("hand-computed three-point correlation") {
    CHECK(pearson(series({1, 2, 3}), series({1, 3, 2})) ==
          doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("regression on an exact line") {
    RegressionLine line = regress(series({0, 1, 2}), series({1, 3, 5}));
    CHECK(line.slope == doctest::Approx(2).epsilon(1e-14));
    CHECK(line.intercept == doctest::Approx(1).epsilon(1e-14));
    CHECK(line.r == doctest::Approx(1).epsilon(1e-14));
    CHECK(line.n == 3);
}

TEST_CASE("hand least-squares on three points") {
    RegressionLine line = regress(series({1, 2, 3}), series({1, 3, 2}));
    CHECK(line.slope == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(line.intercept == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(line.r_squared == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("error conditions") {
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(pearson(series({1, 2}), series({1, 2, 3})),
                        MetricsError);
    }
    SUBCASE("insufficient data") {
        CHECK_THROWS_AS(pearson(series({1}), series({1})), MetricsError);
        CHECK_THROWS_AS(pearson(series({}), series({})), MetricsError);
    }
    SUBCASE("constant series is an explicit error, never zero") {
        try {
            pearson(series({5, 5, 5}, "flat"), series({1, 2, 3}));
            FAIL("expected ZeroVariance");
        } catch (const MetricsError& e) {
            CHECK(e.kind() == ErrorKind::ZeroVariance);
            CHECK(std::string(e.what()).find("flat") != std::string::npos);
        }
        CHECK_THROWS_AS(pearson(series({1, 2, 3}), series({7, 7, 7})),
                        MetricsError);
    }
    SUBCASE("regression rejects constant x only") {
        CHECK_THROWS_AS(regress(series({4, 4, 4}), series({1, 2, 3})),
                        MetricsError);
        RegressionLine line = regress(series({1, 2, 3}), series({9, 9, 9}));
        CHECK(line.slope == 0);
        CHECK(line.intercept == 9);
        CHECK(line.r == 0);
    }
}

TEST_CASE("symmetry is exact") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> value(-100.0, 100.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng() % 30;
        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = value(rng);
            ys[i] = value(rng);
        }
        double a = pearson(series(xs), series(ys));
        double b = pearson(series(ys), series(xs));
        CHECK(a == b);  // bit-for-bit
    }
}

TEST_CASE("affine invariance") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    const double scales[] = {2.5, -3.0, 0.125};
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 3 + rng() % 20;
        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = value(rng);
            ys[i] = value(rng);
        }
        double base = pearson(series(xs), series(ys));
        for (double a : scales) {
            std::vector<double> scaled(n);
            for (std::size_t i = 0; i < n; ++i) scaled[i] = a * xs[i] + 17.0;
            double transformed = pearson(series(scaled), series(ys));
            double sign = a < 0 ? -1.0 : 1.0;
            CHECK(std::fabs(transformed - sign * base) <= 1e-12);
        }
    }
}

TEST_CASE("slope product equals r squared") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> value(0.0, 1000.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng() % 40;
        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = value(rng);
            ys[i] = value(rng) + 0.3 * xs[i];
        }
        RegressionLine xy = regress(series(xs), series(ys));
        RegressionLine yx = regress(series(ys), series(xs));
        CHECK(std::fabs(xy.slope * yx.slope - xy.r_squared) <= 1e-9);
        CHECK(xy.r == doctest::Approx(yx.r).epsilon(1e-14));
    }
}

TEST_CASE("agreement with the definitional oracle") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> value(-1000.0, 1000.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng() % 49;
        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = value(rng);
            ys[i] = value(rng);
        }
        double r = pearson(series(xs), series(ys));
        long double expected = oracle_r(xs, ys);
        CHECK(std::fabs(r - static_cast<double>(expected)) <=
              1e-10 * std::max(1e-12, std::fabs(static_cast<double>(expected))));
        RegressionLine line = regress(series(xs), series(ys));
        long double slope = oracle_slope(xs, ys);
        CHECK(std::fabs(line.slope - static_cast<double>(slope)) <=
              1e-10 * std::max(1e-12, std::fabs(static_cast<double>(slope))));
    }
}

TEST_CASE("result is clamped into the unit interval") {
    // near-perfect correlation with values prone to rounding overshoot
    std::vector<double> xs, ys;
    for (int i = 0; i < 10; ++i) {
        xs.push_back(1e15 + i);
        ys.push_back(2e15 + 2 * i);
    }
    double r = pearson(series(xs), series(ys));
    CHECK(r <= 1.0);
    CHECK(r >= -1.0);
    RegressionLine line = regress(series(xs), series(ys));
    CHECK(line.r_squared <= 1.0);
    CHECK(line.r_squared >= 0.0);
}
