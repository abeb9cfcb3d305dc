#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "spwn/rng.hpp"

// Shared helpers for the test suites. Anything used as an oracle here is
// deliberately written from the defining formula, independent of the
// library code paths it checks.

namespace testutil {

inline double mean(std::span<const double> xs) {
    double s = 0.0;
    for (double v : xs) s += v;
    return s / static_cast<double>(xs.size());
}

inline double variance(std::span<const double> xs) {
    double m = mean(xs);
    double s = 0.0;
    for (double v : xs) s += (v - m) * (v - m);
    return s / static_cast<double>(xs.size());
}

inline double kurtosis(std::span<const double> xs) {
    double m = mean(xs);
    double m2 = 0.0, m4 = 0.0;
    for (double v : xs) {
        double d = v - m;
        double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
    }
    m2 /= static_cast<double>(xs.size());
    m4 /= static_cast<double>(xs.size());
    return m4 / (m2 * m2);
}

// Standard normal CDF through std::erf; oracle for quantile checks.
inline double normal_cdf_erf(double x) {
    return 0.5 * (1.0 + std::erf(x / std::sqrt(2.0)));
}

// Quantile by bisection on the erf-based CDF.
inline double normal_quantile_bisect(double p) {
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (normal_cdf_erf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Chi-square CDF for 1 and 2 degrees of freedom in closed form:
// k=1: P(Z^2 <= x) = erf(sqrt(x/2)); k=2: 1 - exp(-x/2).
inline double chisq_cdf_df1(double x) { return std::erf(std::sqrt(0.5 * x)); }
inline double chisq_cdf_df2(double x) { return 1.0 - std::exp(-0.5 * x); }

// Composite Simpson quadrature of the chi-square density over [0, x].
inline double chisq_cdf_quadrature(double x, unsigned k, std::size_t panels = 20000) {
    if (x <= 0.0) return 0.0;
    double a = 0.5 * static_cast<double>(k);
    double log_norm = -a * std::log(2.0) - std::lgamma(a);
    auto density = [&](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp(log_norm + (a - 1.0) * std::log(t) - 0.5 * t);
    };
    double h = x / static_cast<double>(2 * panels);
    double sum = density(0.0) + density(x);
    for (std::size_t i = 1; i < 2 * panels; ++i) {
        sum += density(static_cast<double>(i) * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

// Autocovariance through the expanded sums
//   (1/n) [ sum x_k x_{k+l} - xbar (S_head + S_tail) + (n-l) xbar^2 ],
// an algebraically different route from the centered-product definition.
inline double acvf_expanded(std::span<const double> x, std::size_t lag) {
    std::size_t n = x.size();
    double xbar = mean(x);
    double cross = 0.0, head = 0.0, tail = 0.0;
    for (std::size_t k = 0; k + lag < n; ++k) {
        cross += x[k] * x[k + lag];
        head += x[k];
        tail += x[k + lag];
    }
    double m = static_cast<double>(n - lag);
    return (cross - xbar * (head + tail) + m * xbar * xbar) / static_cast<double>(n);
}

inline std::vector<double> random_series(spwn::RngStream& rng, std::size_t n) {
    std::vector<double> xs(n);
    for (double& v : xs) v = rng.sample_std_normal();
    return xs;
}

}  // namespace testutil
