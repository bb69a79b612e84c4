#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "rvar/levels.hpp"
#include "rvar/normal.hpp"
#include "rvar/rng.hpp"
#include "rvar/triplet.hpp"

using namespace rvar;

TEST_CASE("LevelPair enforces strict ordering") {
    CHECK_NOTHROW(LevelPair(0.1, 0.9));
    CHECK_NOTHROW(LevelPair(0.01, 0.05));
    CHECK_THROWS_AS(LevelPair(0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(LevelPair(0.9, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(LevelPair(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(LevelPair(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(LevelPair(0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LevelPair(0.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(LevelPair(std::nan(""), 0.5), std::invalid_argument);
    CHECK(LevelPair(0.2, 0.8).width() == doctest::Approx(0.6));
}

TEST_CASE("in_sensible_domain") {
    CHECK(in_sensible_domain({0.0, 0.0, 0.0}));
    CHECK(in_sensible_domain({-1.0, 2.0, 0.5}));
    CHECK_FALSE(in_sensible_domain({0.0, 1.0, 2.0}));

    // invariant under common shifts
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Triplet t{4.0 * rng.next_uniform() - 2.0, 4.0 * rng.next_uniform() - 2.0,
                  4.0 * rng.next_uniform() - 2.0};
        const double c = 10.0 * rng.next_uniform() - 5.0;
        CHECK(in_sensible_domain(t) == in_sensible_domain(t + c));
    }
}

TEST_CASE("normal_cdf matches quadrature oracle") {
    CHECK(normal_cdf(0.0) == 0.5);  // exact
    CHECK(normal_cdf(1.6448536269514722) == doctest::Approx(0.95).epsilon(1e-10));

    for (double x : {-4.0, -2.5, -1.0, -0.3, 0.2, 0.7, 1.5, 3.1, 5.0})
        CHECK(std::fabs(normal_cdf(x) - oracles::normal_cdf_quadrature(x)) <= 1e-12);

    // symmetry and monotonicity
    CHECK(normal_cdf(-1.23) == doctest::Approx(1.0 - normal_cdf(1.23)).epsilon(1e-15));
    double prev = normal_cdf(-10.0);
    for (double x = -9.5; x <= 10.0; x += 0.5) {
        const double cur = normal_cdf(x);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("normal_pdf") {
    CHECK(normal_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-14));
    CHECK(normal_pdf(1.0) == doctest::Approx(0.24197072451914337).epsilon(1e-14));
    CHECK(normal_pdf(-2.5) == normal_pdf(2.5));
}

TEST_CASE("normal_quantile") {
    CHECK(normal_quantile(0.5) == 0.0);
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959964).epsilon(1e-5));
    CHECK(normal_quantile(0.1) == doctest::Approx(-normal_quantile(0.9)).epsilon(1e-12));

    CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
    CHECK_THROWS_AS(normal_quantile(-0.2), std::domain_error);
    CHECK_THROWS_AS(normal_quantile(1.2), std::domain_error);

    // round trip over 1000 random levels
    SplitMix64 rng(42);
    std::vector<double> ps(1000);
    for (auto& p : ps) p = 0.001 + 0.998 * rng.next_uniform();
    for (double p : ps)
        CHECK(std::fabs(normal_cdf(normal_quantile(p)) - p) <= 1e-8);

    // strictly increasing
    std::sort(ps.begin(), ps.end());
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
        CHECK(normal_quantile(ps[i]) < normal_quantile(ps[i + 1]));
}
