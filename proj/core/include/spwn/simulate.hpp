#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spwn/rng.hpp"
#include "spwn/time_series.hpp"

namespace spwn {

/// ARCH(1) specification: X_t = sigma_t * eta_t with Gaussian eta and
/// sigma_t^2 = omega + alpha1 * X_{t-1}^2.
struct ArchSpec {
    double omega = 0.01;   ///< intercept, > 0
    double alpha1 = 0.0;   ///< ARCH coefficient, in [0, 1) so second moments exist

    void validate() const;
};

/// Two-component mixture-autoregressive white noise: with probability
/// weight1 the next value is phi1 * X_{t-1} + e_t, otherwise
/// phi2 * X_{t-1} + sigma2 * e_t, with e_t i.i.d. standardised t3. The
/// defaults put the model on the white-noise manifold
/// (weight1*phi1 + (1-weight1)*phi2 = 0) while keeping it non-ARCH-type.
struct MarSpec {
    double weight1 = 0.25;
    double phi1 = 0.3;
    double phi2 = -0.1;
    double sigma2 = 1.0;   ///< scale of the second component, > 0

    void validate() const;
};

struct SimConfig {
    std::size_t n = 2000;        ///< retained length, >= 1
    std::size_t burn_in = 500;   ///< discarded warm-up observations
    RngStream rng;               ///< owned stream; value semantics
};

/// Simulate an ARCH(1) path. Initialisation X_0 = 0, sigma_1^2 = omega;
/// the first burn_in values are discarded and n observations returned.
[[nodiscard]] TimeSeries simulate_arch1(const ArchSpec& spec, SimConfig cfg);

/// ARCH(1) path together with its volatility path, index-aligned with x.
/// sigma here is exactly the conditional scale the simulator used, so the
/// recursion can be replayed from x to check the ARCH-type contract.
struct Arch1Path {
    TimeSeries x;
    std::vector<double> sigma;
};

[[nodiscard]] Arch1Path simulate_arch1_with_volatility(const ArchSpec& spec, SimConfig cfg);

/// Simulate the mixture-autoregressive model. Each step consumes one
/// uniform for the regime choice, then the innovation draws, in that fixed
/// order. X_0 = 0.
[[nodiscard]] TimeSeries simulate_mar(const MarSpec& spec, SimConfig cfg);

/// Closed-form asymptotic variance w_11 of sqrt(n) * rho_hat(1) for a
/// Gaussian ARCH(1) process. With m2 = omega/(1-alpha1) and
/// m4 = 3(omega^2 + 2*omega*alpha1*m2)/(1 - 3*alpha1^2),
///
///   w_11 = (omega*m2 + alpha1*m4) / m2^2.
///
/// Empty when alpha1 >= 1/sqrt(3), where the fourth moment does not exist.
[[nodiscard]] std::optional<double> arch1_theoretical_w11(const ArchSpec& spec);

}  // namespace spwn
