#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "spwn/power_transform.hpp"
#include "spwn/rng.hpp"
#include "spwn/time_series.hpp"

using spwn::PowerParams;
using spwn::RngStream;
using spwn::TimeSeries;

TEST_CASE("signed_power pinned values") {
    CHECK(spwn::signed_power(4.0, 0.5) == 2.0);
    CHECK(spwn::signed_power(-8.0, 1.0 / 3.0) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(spwn::signed_power(0.0, 0.7) == 0.0);
    CHECK(spwn::signed_power(-3.0, 0.0) == -1.0);  // sign-function limit
    CHECK(spwn::signed_power(3.0, 0.0) == 1.0);
    CHECK(spwn::signed_power(0.0, 0.0) == 0.0);
    CHECK(spwn::signed_power(1.75, 1.0) == 1.75);  // identity at lambda = 1
}

TEST_CASE("signed_power rejects bad input") {
    CHECK_THROWS_AS(spwn::signed_power(std::numeric_limits<double>::quiet_NaN(), 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(spwn::signed_power(std::numeric_limits<double>::infinity(), 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(spwn::signed_power(1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(spwn::signed_power(1.0, std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

TEST_CASE("asym_power pinned values and the c = -1 reduction") {
    CHECK(spwn::asym_power(9.0, {0.5, -1.0}) == 3.0);
    CHECK(spwn::asym_power(-9.0, {0.5, -2.0}) == -6.0);
    CHECK(spwn::asym_power(-9.0, {0.5, 0.0}) == 0.0);
    CHECK(spwn::asym_power(0.0, {0.3, 2.0}) == 0.0);

    RngStream rng(7, 0);
    for (int i = 0; i < 2000; ++i) {
        double x = (rng.uniform01() - 0.5) * 200.0;
        double lambda = rng.uniform01() * 3.0;
        CHECK(spwn::asym_power(x, {lambda, -1.0}) == spwn::signed_power(x, lambda));
    }
}

TEST_CASE("signed_power_inverse pinned values and errors") {
    CHECK(spwn::signed_power_inverse(2.0, 0.5) == 4.0);
    CHECK(spwn::signed_power_inverse(-2.0, 1.0 / 3.0) ==
          doctest::Approx(-8.0).epsilon(1e-14));
    CHECK(spwn::signed_power_inverse(0.0, 0.9) == 0.0);
    CHECK_THROWS_AS(spwn::signed_power_inverse(1.0, 0.0), std::domain_error);
}

TEST_CASE("multiplicative law on [0,inf) x R for the asymmetric family") {
    RngStream rng(11, 0);
    for (int i = 0; i < 20000; ++i) {
        double x = rng.uniform01() * 1e3;  // nonnegative factor
        double y = (rng.uniform01() - 0.5) * 2e3;
        PowerParams p{rng.uniform01() * 4.0, (rng.uniform01() - 0.5) * 6.0};
        double lhs = spwn::asym_power(x * y, p);
        double rhs = spwn::asym_power(x, p) * spwn::asym_power(y, p);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("full multiplicative law for the signed power") {
    RngStream rng(13, 0);
    for (int i = 0; i < 20000; ++i) {
        double x = (rng.uniform01() - 0.5) * 2e3;
        double y = (rng.uniform01() - 0.5) * 2e3;
        double lambda = rng.uniform01() * 3.0;
        double lhs = spwn::signed_power(x * y, lambda);
        double rhs = spwn::signed_power(x, lambda) * spwn::signed_power(y, lambda);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("round trip x -> x^<lambda> -> x for lambda in (0,1]") {
    RngStream rng(17, 0);
    for (int i = 0; i < 20000; ++i) {
        double lambda = rng.uniform01();
        if (lambda == 0.0) lambda = 1.0;
        // log-uniform magnitude over [1e-6, 1e6], random sign
        double mag = std::pow(10.0, rng.uniform01() * 12.0 - 6.0);
        double x = rng.uniform01() < 0.5 ? -mag : mag;
        double back = spwn::signed_power_inverse(spwn::signed_power(x, lambda), lambda);
        CHECK(back == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("strict monotonicity and oddness") {
    RngStream rng(19, 0);
    for (int i = 0; i < 10000; ++i) {
        double a = (rng.uniform01() - 0.5) * 100.0;
        double b = (rng.uniform01() - 0.5) * 100.0;
        double lambda = rng.uniform01() * 2.0 + 1e-3;
        double lo = std::min(a, b), hi = std::max(a, b);
        if (lo < hi) CHECK(spwn::signed_power(lo, lambda) < spwn::signed_power(hi, lambda));
        // oddness is exact: |-x| == |x| and only the sign flips
        CHECK(spwn::signed_power(-a, lambda) == -spwn::signed_power(a, lambda));
    }
}

TEST_CASE("continuity at zero for lambda > 0") {
    for (double lambda : {0.01, 0.25, 0.5, 1.0}) {
        double up = spwn::signed_power(1e-300, lambda);
        double dn = spwn::signed_power(-1e-300, lambda);
        CHECK(up > 0.0);
        CHECK(dn == -up);
        CHECK(up <= std::pow(1e-300, lambda));
   }
}

TEST_CASE("transform_series maps elementwise and records provenance") {
    TimeSeries xs({1.0, -4.0, 0.0});
    TimeSeries ys = spwn::transform_series(xs, {0.5, -1.0});
    REQUIRE(ys.size() == 3);
    CHECK(ys[0] == 1.0);
    CHECK(ys[1] == -2.0);
    CHECK(ys[2] == 0.0);
    REQUIRE(ys.transform().has_value());
    CHECK(ys.transform()->lambda == 0.5);
    CHECK(ys.transform()->c == -1.0);

    TimeSeries cube({-1.0, 8.0});
    TimeSeries croot = spwn::transform_series(cube, {1.0 / 3.0, -1.0});
    CHECK(croot[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(croot[1] == doctest::Approx(2.0).epsilon(1e-15));

    // identity at lambda = 1, bit for bit
    TimeSeries raw({0.1, -2.75, 3.5e-9, 123.456});
    TimeSeries same = spwn::transform_series(raw, {1.0, -1.0});
    for (std::size_t i = 0; i < raw.size(); ++i) CHECK(same[i] == raw[i]);
}

TEST_CASE("transform_series reports the overflowing index") {
    TimeSeries xs({1.0, 1e300, 2.0});
    try {
        (void)spwn::transform_series(xs, {2.0, -1.0});
        FAIL("expected overflow");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("index 1") != std::string::npos);
    }
}

TEST_CASE("TimeSeries enforces finite nonempty data") {
    CHECK_THROWS_AS(TimeSeries({}), std::domain_error);
    try {
        TimeSeries bad({1.0, 2.0, std::numeric_limits<double>::quiet_NaN()});
        FAIL("expected rejection");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("index 2") != std::string::npos);
    }
}

TEST_CASE("PowerParams validation and invertibility flags") {
    CHECK_THROWS_AS(PowerParams{-1.0, -1.0}.validate(), std::domain_error);
    CHECK(PowerParams{0.5, -1.0}.invertible());
    CHECK(PowerParams{0.5, -2.0}.invertible());
    CHECK_FALSE(PowerParams{0.5, 0.0}.invertible());  // c = 0 collapses x < 0
    CHECK_FALSE(PowerParams{0.0, -1.0}.invertible()); // sign function
}
