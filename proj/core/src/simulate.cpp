#include "spwn/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace spwn {

void ArchSpec::validate() const {
    if (!std::isfinite(omega) || !(omega > 0.0)) {
        throw std::domain_error("ArchSpec: omega must be positive, got " +
                                std::to_string(omega));
    }
    if (!std::isfinite(alpha1) || alpha1 < 0.0 || alpha1 >= 1.0) {
        throw std::domain_error("ArchSpec: alpha1 must lie in [0, 1), got " +
                                std::to_string(alpha1));
    }
}

void MarSpec::validate() const {
    if (!std::isfinite(weight1) || !(weight1 > 0.0 && weight1 < 1.0)) {
        throw std::domain_error("MarSpec: weight1 must lie in (0, 1)");
    }
    if (!std::isfinite(phi1) || !std::isfinite(phi2)) {
        throw std::domain_error("MarSpec: AR coefficients must be finite");
    }
    if (!std::isfinite(sigma2) || !(sigma2 > 0.0)) {
        throw std::domain_error("MarSpec: sigma2 must be positive, got " +
                                std::to_string(sigma2));
    }
}

namespace {

Arch1Path simulate_arch1_impl(const ArchSpec& spec, SimConfig cfg, bool keep_sigma) {
    spec.validate();
    if (cfg.n == 0) throw std::domain_error("SimConfig: n must be >= 1");

    std::vector<double> x;
    x.reserve(cfg.n);
    std::vector<double> sigma;
    if (keep_sigma) sigma.reserve(cfg.n);

    double x_prev = 0.0;  // X_0 = 0, so sigma_1^2 = omega
    const std::size_t total = cfg.burn_in + cfg.n;
    for (std::size_t t = 0; t < total; ++t) {
        double sig = std::sqrt(spec.omega + spec.alpha1 * x_prev * x_prev);
        double xt = sig * cfg.rng.sample_std_normal();
        if (t >= cfg.burn_in) {
            x.push_back(xt);
            if (keep_sigma) sigma.push_back(sig);
        }
        x_prev = xt;
    }
    return {TimeSeries(std::move(x)), std::move(sigma)};
}

}  // namespace

TimeSeries simulate_arch1(const ArchSpec& spec, SimConfig cfg) {
    return std::move(simulate_arch1_impl(spec, std::move(cfg), false).x);
}

Arch1Path simulate_arch1_with_volatility(const ArchSpec& spec, SimConfig cfg) {
    return simulate_arch1_impl(spec, std::move(cfg), true);
}

TimeSeries simulate_mar(const MarSpec& spec, SimConfig cfg) {
    spec.validate();
    if (cfg.n == 0) throw std::domain_error("SimConfig: n must be >= 1");

    std::vector<double> x;
    x.reserve(cfg.n);

    double x_prev = 0.0;
    const std::size_t total = cfg.burn_in + cfg.n;
    for (std::size_t t = 0; t < total; ++t) {
        // Regime uniform first, innovation second: fixed consumption order.
        double u = cfg.rng.uniform01();
        double e = cfg.rng.sample_std_t3();
        double xt = u < spec.weight1 ? spec.phi1 * x_prev + e
                                     : spec.phi2 * x_prev + spec.sigma2 * e;
        if (t >= cfg.burn_in) x.push_back(xt);
        x_prev = xt;
    }
    return TimeSeries(std::move(x));
}

std::optional<double> arch1_theoretical_w11(const ArchSpec& spec) {
    spec.validate();
    const double a = spec.alpha1;
    if (3.0 * a * a >= 1.0) return std::nullopt;  // no fourth moment
    const double m2 = spec.omega / (1.0 - a);
    const double m4 = 3.0 * (spec.omega * spec.omega + 2.0 * spec.omega * a * m2) /
                      (1.0 - 3.0 * a * a);
    return (spec.omega * m2 + a * m4) / (m2 * m2);
}

}  // namespace spwn
