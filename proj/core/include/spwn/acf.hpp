#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spwn/time_series.hpp"

namespace spwn {

/// Finite-sample correction c_in applied to the robust variance estimator.
/// Both choices are asymptotically equal to one.
enum class WCorrection {
    n_over_n_minus_i,  ///< c_in = n / (n - i), the default
    one,               ///< c_in = 1
};

/// Arithmetic mean of the observations.
[[nodiscard]] double sample_mean(const TimeSeries& xs);

/// Mean-corrected sample autocovariance at lag ell with divisor n:
/// gamma_hat(ell) = (1/n) * sum_{k=1}^{n-ell} (X_k - Xbar)(X_{k+ell} - Xbar).
/// Throws std::out_of_range when ell >= n.
[[nodiscard]] double sample_acvf(const TimeSeries& xs, std::size_t lag);

/// Sample autocorrelations rho_hat(1..max_lag) = gamma_hat(ell)/gamma_hat(0).
/// The divisor-n convention keeps every value in [-1, 1]. Throws
/// std::domain_error on a constant series (gamma_hat(0) = 0).
[[nodiscard]] std::vector<double> sample_acf(const TimeSeries& xs, std::size_t max_lag);

/**
 * @brief Heteroskedasticity-robust estimate of the asymptotic variance of
 *        sqrt(n) * rho_hat(i) under an ARCH-type white noise null:
 *
 *   w_hat_ii = n * c_in * sum_{d=1}^{n-i} X_d^2 X_{d+i}^2 / (sum_d X_d^2)^2.
 *
 * Uses raw (non-mean-corrected) squares. Throws std::domain_error on an
 * all-zero series and std::out_of_range unless 1 <= i < n.
 */
[[nodiscard]] double w_hat(const TimeSeries& xs, std::size_t lag,
                           WCorrection correction = WCorrection::n_over_n_minus_i);

/**
 * @brief Bartlett's formula for the asymptotic covariance w_ij of sample
 *        autocorrelations of a linear process with finite fourth moments.
 *
 * rho is one-sided: rho[k] = rho(k) for k = 0..K, extended symmetrically;
 * rho[0] must equal 1. The infinite sum is truncated to the support of rho.
 * For white noise this reduces to the classical w_ii = 1.
 */
[[nodiscard]] double bartlett_w(std::span<const double> rho, std::size_t i, std::size_t j);

/// Two-sided significance band halfwidths z_{(1+level)/2} * sqrt(w_i / n),
/// one per entry of w.
[[nodiscard]] std::vector<double> significance_bands(std::span<const double> w,
                                                     std::size_t n, double level);

struct PortmanteauResult {
    double statistic;   ///< Q = n * sum_i rho_hat(i)^2 / w_hat_ii
    double p_value;     ///< 1 - ChiSqCDF_m(Q)
    std::size_t lags;   ///< m, also the chi-square degrees of freedom
};

/// Robust portmanteau test over lags 1..max_lag. Requires 1 <= max_lag < n
/// and a non-degenerate series.
[[nodiscard]] PortmanteauResult portmanteau(const TimeSeries& xs, std::size_t max_lag,
                                            WCorrection correction = WCorrection::n_over_n_minus_i);

/// Per-lag diagnostics of one series: autocorrelations, robust variances,
/// significance bands and the portmanteau test assembled from the same
/// per-lag quantities.
struct AcfDiagnostics {
    std::size_t max_lag = 0;
    std::vector<double> rho_hat;          ///< rho_hat[i-1] is lag i
    std::vector<double> w_hat;            ///< w_hat[i-1] is lag i
    std::vector<double> band_halfwidth;   ///< per lag, level-dependent
    double level = 0.95;
    double portmanteau_stat = 0.0;
    double portmanteau_pvalue = 1.0;
};

struct LambdaDiagnostics {
    double lambda;
    AcfDiagnostics diag;
};

/// Full diagnostics for one series.
[[nodiscard]] AcfDiagnostics acf_diagnostics(const TimeSeries& xs, std::size_t max_lag,
                                             double level,
                                             WCorrection correction = WCorrection::n_over_n_minus_i);

/// Signed-power scan: for each lambda in the grid, transform xs with the
/// signed power (c = -1) and compute full diagnostics. lambda = 1 yields the
/// diagnostics of the raw series.
[[nodiscard]] std::vector<LambdaDiagnostics> acf_diagnose(
    const TimeSeries& xs, std::size_t max_lag, std::span<const double> lambda_grid,
    double level, WCorrection correction = WCorrection::n_over_n_minus_i);

/// Diagnostic default when no lag count is given: min(20, n/10), at least 1.
[[nodiscard]] std::size_t default_max_lag(std::size_t n);

}  // namespace spwn
