#include <doctest.h>

#include <cmath>
#include <vector>

#include "spwn/rng.hpp"
#include "test_util.hpp"

using spwn::RngStream;

TEST_CASE("same (seed, stream) reproduces the same sequence") {
    RngStream a(42, 7), b(42, 7);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStream c(42, 8);
    int same = 0;
    RngStream a2(42, 7);
    for (int i = 0; i < 1000; ++i) same += a2.next_u64() == c.next_u64();
    CHECK(same == 0);

    RngStream d(43, 7);
    RngStream a3(42, 7);
    same = 0;
    for (int i = 0; i < 1000; ++i) same += a3.next_u64() == d.next_u64();
    CHECK(same == 0);
}

TEST_CASE("uniform ranges") {
    RngStream rng(1, 0);
    for (int i = 0; i < 100000; ++i) {
        double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        double v = rng.uniform_pos();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("standard normal sample moments") {
    RngStream rng(2024, 0);
    std::vector<double> xs(1000000);
    for (double& v : xs) v = rng.sample_std_normal();
    CHECK(std::fabs(testutil::mean(xs)) < 0.005);
    CHECK(std::fabs(testutil::variance(xs) - 1.0) < 0.01);
}

TEST_CASE("standardised t3 sample moments, symmetry and heavy tails") {
    RngStream rng(2025, 0);
    std::vector<double> xs(1000000);
    std::size_t nonpositive = 0;
    for (double& v : xs) {
        v = rng.sample_std_t3();
        if (v <= 0.0) ++nonpositive;
    }
    CHECK(std::fabs(testutil::mean(xs)) < 0.01);
    CHECK(std::fabs(testutil::variance(xs) - 1.0) < 0.05);
    CHECK(std::fabs(static_cast<double>(nonpositive) / 1e6 - 0.5) < 0.002);
    // no fourth moment: the sample kurtosis blows far past the Gaussian 3
    CHECK(testutil::kurtosis(xs) > 9.0);
}

TEST_CASE("disjoint streams are empirically uncorrelated") {
    const std::size_t n = 1000000;
    RngStream s1(99, 1), s2(99, 2);
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = s1.uniform01();
        b[i] = s2.uniform01();
    }
    double ma = testutil::mean(a), mb = testutil::mean(b);
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    double corr = cov / std::sqrt(va * vb);
    CHECK(std::fabs(corr) < 4.0 / std::sqrt(static_cast<double>(n)));
}
