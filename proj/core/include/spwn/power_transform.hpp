#pragma once

#include <optional>

namespace spwn {

/**
 * @brief Parameters of the asymmetric power map f(x) = |x|^lambda (x > 0),
 *        0 (x = 0), c*|x|^lambda (x < 0).
 *
 * c = -1 gives the signed power transform proper. Any c < 0 keeps the map
 * one-to-one; c = 0 collapses the negative half line and is allowed but
 * flagged as non-invertible. lambda = 0 selects the sign-function limit.
 */
struct PowerParams {
    double lambda = 1.0;  ///< exponent, must be >= 0 and finite
    double c = -1.0;      ///< negative-branch coefficient, must be finite

    /// Throws std::domain_error if the invariants above are violated.
    void validate() const;

    /// True when the map has a well-defined inverse (lambda > 0 and c < 0).
    [[nodiscard]] bool invertible() const { return lambda > 0.0 && c < 0.0; }

    friend bool operator==(const PowerParams&, const PowerParams&) = default;
};

/// sign(x) * |x|^lambda. Zero maps to zero for every lambda; lambda = 0
/// degenerates to the sign function. Throws std::domain_error on non-finite
/// x or invalid lambda.
[[nodiscard]] double signed_power(double x, double lambda);

/// The general asymmetric family: |x|^lambda, 0, or c*|x|^lambda depending
/// on the sign of x. Reduces to signed_power for c = -1.
[[nodiscard]] double asym_power(double x, const PowerParams& params);

/// Inverse of signed_power for lambda > 0: sign(y) * |y|^(1/lambda).
/// Throws std::domain_error when lambda = 0 (sign function, not invertible).
[[nodiscard]] double signed_power_inverse(double y, double lambda);

}  // namespace spwn
