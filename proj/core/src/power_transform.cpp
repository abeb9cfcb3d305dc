#include "spwn/power_transform.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spwn {

namespace {

void require_finite_input(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("power transform: input must be finite, got " +
                                std::to_string(x));
    }
}

void require_valid_exponent(double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw std::domain_error("power transform: exponent must be finite and >= 0, got " +
                                std::to_string(lambda));
    }
}

}  // namespace

void PowerParams::validate() const {
    require_valid_exponent(lambda);
    if (!std::isfinite(c)) {
        throw std::domain_error("power transform: coefficient c must be finite");
    }
}

double signed_power(double x, double lambda) {
    require_finite_input(x);
    require_valid_exponent(lambda);
    if (x == 0.0) return 0.0;  // f(0) = 0 for every lambda, including 0
    if (lambda == 1.0) return x;
    double mag = std::pow(std::fabs(x), lambda);
    return std::signbit(x) ? -mag : mag;
}

double asym_power(double x, const PowerParams& params) {
    params.validate();
    require_finite_input(x);
    if (x == 0.0) return 0.0;
    double mag = std::pow(std::fabs(x), params.lambda);
    return x > 0.0 ? mag : params.c * mag;
}

double signed_power_inverse(double y, double lambda) {
    require_finite_input(y);
    require_valid_exponent(lambda);
    if (lambda == 0.0) {
        throw std::domain_error("signed power with lambda = 0 is the sign function "
                                "and has no inverse");
    }
    if (y == 0.0) return 0.0;
    if (lambda == 1.0) return y;
    double mag = std::pow(std::fabs(y), 1.0 / lambda);
    return std::signbit(y) ? -mag : mag;
}

}  // namespace spwn
