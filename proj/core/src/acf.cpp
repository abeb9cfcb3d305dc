#include "spwn/acf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "spwn/special_functions.hpp"

namespace spwn {

namespace {

void require_lag_below_n(std::size_t lag, std::size_t n, const char* who) {
    if (lag >= n) {
        throw std::out_of_range(std::string(who) + ": lag " + std::to_string(lag) +
                                " out of range for series of length " + std::to_string(n));
    }
}

// Centered single-pass autocovariance over a precomputed mean.
double acvf_with_mean(std::span<const double> x, std::size_t lag, double mean) {
    double sum = 0.0;
    for (std::size_t k = 0; k + lag < x.size(); ++k) {
        sum += (x[k] - mean) * (x[k + lag] - mean);
    }
    return sum / static_cast<double>(x.size());
}

}  // namespace

double sample_mean(const TimeSeries& xs) {
    double sum = 0.0;
    for (double v : xs.values()) sum += v;
    return sum / static_cast<double>(xs.size());
}

double sample_acvf(const TimeSeries& xs, std::size_t lag) {
    require_lag_below_n(lag, xs.size(), "sample_acvf");
    return acvf_with_mean(xs.values(), lag, sample_mean(xs));
}

std::vector<double> sample_acf(const TimeSeries& xs, std::size_t max_lag) {
    if (max_lag == 0) throw std::out_of_range("sample_acf: max_lag must be >= 1");
    require_lag_below_n(max_lag, xs.size(), "sample_acf");
    double mean = sample_mean(xs);
    double gamma0 = acvf_with_mean(xs.values(), 0, mean);
    if (gamma0 <= 0.0) {
        throw std::domain_error("sample_acf: degenerate (constant) series");
    }
    std::vector<double> rho(max_lag);
    for (std::size_t ell = 1; ell <= max_lag; ++ell) {
        rho[ell - 1] = acvf_with_mean(xs.values(), ell, mean) / gamma0;
    }
    return rho;
}

double w_hat(const TimeSeries& xs, std::size_t lag, WCorrection correction) {
    std::size_t n = xs.size();
    if (lag == 0) throw std::out_of_range("w_hat: lag must be >= 1");
    require_lag_below_n(lag, n, "w_hat");

    auto x = xs.values();
    double denom = 0.0;
    for (double v : x) denom += v * v;
    if (denom <= 0.0) throw std::domain_error("w_hat: degenerate (all-zero) series");

    double num = 0.0;
    for (std::size_t d = 0; d + lag < n; ++d) {
        num += x[d] * x[d] * x[d + lag] * x[d + lag];
    }

    double c = correction == WCorrection::n_over_n_minus_i
                   ? static_cast<double>(n) / static_cast<double>(n - lag)
                   : 1.0;
    return static_cast<double>(n) * c * num / (denom * denom);
}

double bartlett_w(std::span<const double> rho, std::size_t i, std::size_t j) {
    if (rho.empty() || rho[0] != 1.0) {
        throw std::domain_error("bartlett_w: rho(0) must equal 1");
    }
    if (i == 0 || j == 0) throw std::out_of_range("bartlett_w: lags must be >= 1");

    const long support = static_cast<long>(rho.size()) - 1;
    auto at = [&](long k) {
        k = std::labs(k);
        return k <= support ? rho[static_cast<std::size_t>(k)] : 0.0;
    };

    const long li = static_cast<long>(i);
    const long lj = static_cast<long>(j);
    const double ri = at(li);
    const double rj = at(lj);
    const long reach = support + std::max(li, lj);

    double sum = 0.0;
    for (long k = -reach; k <= reach; ++k) {
        double rk = at(k);
        sum += at(k + li) * at(k + lj) + at(k - li) * at(k + lj) +
               2.0 * ri * rj * rk * rk - 2.0 * ri * rk * at(k + lj) -
               2.0 * rj * rk * at(k + li);
    }
    return sum;
}

std::vector<double> significance_bands(std::span<const double> w, std::size_t n,
                                       double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw std::domain_error("significance_bands: level must lie in (0, 1)");
    }
    if (n == 0) throw std::domain_error("significance_bands: n must be >= 1");
    double z = normal_quantile(0.5 * (1.0 + level));
    std::vector<double> bands;
    bands.reserve(w.size());
    for (double wi : w) {
        if (wi < 0.0) throw std::domain_error("significance_bands: negative variance");
        bands.push_back(z * std::sqrt(wi / static_cast<double>(n)));
    }
    return bands;
}

PortmanteauResult portmanteau(const TimeSeries& xs, std::size_t max_lag,
                              WCorrection correction) {
    AcfDiagnostics d = acf_diagnostics(xs, max_lag, 0.95, correction);
    return {d.portmanteau_stat, d.portmanteau_pvalue, max_lag};
}

AcfDiagnostics acf_diagnostics(const TimeSeries& xs, std::size_t max_lag, double level,
                               WCorrection correction) {
    AcfDiagnostics out;
    out.max_lag = max_lag;
    out.level = level;
    out.rho_hat = sample_acf(xs, max_lag);
    out.w_hat.reserve(max_lag);
    for (std::size_t i = 1; i <= max_lag; ++i) {
        double wi = w_hat(xs, i, correction);
        if (!(wi > 0.0)) {
            throw std::domain_error("acf diagnostics: degenerate series (w_hat = 0 at lag " +
                                    std::to_string(i) + ")");
        }
        out.w_hat.push_back(wi);
    }
    out.band_halfwidth = significance_bands(out.w_hat, xs.size(), level);

    // Assembled exactly from the per-lag values above.
    double q = 0.0;
    for (std::size_t i = 0; i < max_lag; ++i) {
        q += out.rho_hat[i] * out.rho_hat[i] / out.w_hat[i];
    }
    q *= static_cast<double>(xs.size());
    out.portmanteau_stat = q;
    out.portmanteau_pvalue = 1.0 - chisq_cdf(q, static_cast<unsigned>(max_lag));
    return out;
}

std::vector<LambdaDiagnostics> acf_diagnose(const TimeSeries& xs, std::size_t max_lag,
                                            std::span<const double> lambda_grid,
                                            double level, WCorrection correction) {
    std::vector<LambdaDiagnostics> out;
    out.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        TimeSeries y = transform_series(xs, PowerParams{lambda, -1.0});
        out.push_back({lambda, acf_diagnostics(y, max_lag, level, correction)});
    }
    return out;
}

std::size_t default_max_lag(std::size_t n) {
    return std::max<std::size_t>(1, std::min<std::size_t>(20, n / 10));
}

}  // namespace spwn
