#pragma once

namespace spwn {

/// Standard normal quantile Phi^-1(p) for p in (0,1). Absolute error is
/// well below 1e-9 over the full domain.
[[nodiscard]] double normal_quantile(double p);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0. Series
/// expansion for x < a + 1, continued fraction otherwise.
[[nodiscard]] double regularized_gamma_p(double a, double x);

/// Chi-square CDF with k degrees of freedom: P(k/2, x/2).
[[nodiscard]] double chisq_cdf(double x, unsigned k);

/// Chi-square quantile by bracketed bisection on chisq_cdf; the returned x
/// satisfies |chisq_cdf(x, k) - p| <= 1e-10.
[[nodiscard]] double chisq_quantile(double p, unsigned k);

}  // namespace spwn
