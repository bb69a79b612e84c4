#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "rvar/measures.hpp"
#include "rvar/normal.hpp"
#include "rvar/rng.hpp"

using namespace rvar;

namespace {

Sample one_to_ten() {
    std::vector<double> v(10);
    std::iota(v.begin(), v.end(), 1.0);
    return Sample(v);
}

// Empirical distribution of a sample as explicit atoms (ties merged).
DiscreteDistribution empirical_distribution(const Sample& s) {
    const auto& ys = s.sorted();
    std::vector<double> pts, ms;
    const double w = 1.0 / static_cast<double>(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i) {
        if (!pts.empty() && pts.back() == ys[i])
            ms.back() += w;
        else {
            pts.push_back(ys[i]);
            ms.push_back(w);
        }
    }
    return DiscreteDistribution(pts, ms);
}

}  // namespace

TEST_CASE("empirical_var") {
    const Sample s = one_to_ten();
    CHECK(empirical_var(s, 0.2) == 2.0);
    CHECK(empirical_var(Sample({5.0}), 0.3) == 5.0);
    CHECK(empirical_var(Sample({5.0}), 0.99) == 5.0);
    CHECK_THROWS_AS(empirical_var(s, 0.0), std::domain_error);
    CHECK_THROWS_AS(empirical_var(s, 1.0), std::domain_error);
    CHECK_THROWS_AS(Sample(std::vector<double>{}), std::invalid_argument);

    SplitMix64 rng(3);
    std::vector<double> draws(1000);
    for (auto& d : draws) d = rng.next_normal();
    CHECK(empirical_var(Sample(draws), 0.1) ==
          doctest::Approx(normal_quantile(0.1)).epsilon(0.15));
}

TEST_CASE("empirical_rvar") {
    const Sample s = one_to_ten();
    CHECK(empirical_rvar(s, LevelPair(0.2, 0.8)) == doctest::Approx(5.5).epsilon(1e-12));

    const Sample sym({-3.0, -1.0, 0.0, 1.0, 3.0});
    CHECK(empirical_rvar(sym, LevelPair(0.25, 0.75)) == doctest::Approx(0.0));

    const Sample single({7.5});
    CHECK(empirical_rvar(single, LevelPair(0.1, 0.9)) == 7.5);
    CHECK(empirical_rvar(single, LevelPair(0.6, 0.7)) == 7.5);
}

TEST_CASE("distribution_rvar matches the plug-in formula examples") {
    DiscreteDistribution point({3.25}, {1.0});
    CHECK(distribution_rvar(point, LevelPair(0.1, 0.9)) == doctest::Approx(3.25));
    CHECK(distribution_rvar(point, LevelPair(0.6, 0.61)) == doctest::Approx(3.25));

    DiscreteDistribution coin({0.0, 1.0}, {0.5, 0.5});
    CHECK(distribution_rvar(coin, LevelPair(0.25, 0.75)) == doctest::Approx(0.5));

    DiscreteDistribution three({-1.0, 0.0, 1.0}, {0.2, 0.6, 0.2});
    CHECK(distribution_rvar(three, LevelPair(0.1, 0.9)) == doctest::Approx(0.0));
}

TEST_CASE("empirical_es") {
    const Sample s = one_to_ten();
    CHECK(empirical_es(s, 0.2) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(empirical_es(Sample({4.0, 4.0, 4.0}), 0.5) == doctest::Approx(4.0));

    // ES-difference identity
    const double a = 0.2, b = 0.8;
    const double lhs = (b * empirical_es(s, b) - a * empirical_es(s, a)) / (b - a);
    CHECK(lhs == doctest::Approx(empirical_rvar(s, LevelPair(a, b))).epsilon(1e-13));
    CHECK(lhs == doctest::Approx(5.5).epsilon(1e-12));
}

TEST_CASE("normal_var and normal_rvar") {
    CHECK(normal_var(0.0, 1.0, 0.5) == 0.0);
    CHECK(normal_var(1.7, 1.0, 0.1) ==
          doctest::Approx(1.7 + normal_quantile(0.1)).epsilon(1e-14));
    CHECK(normal_var(0.0, std::sqrt(2.0), 0.1) ==
          doctest::Approx(std::sqrt(2.0) * normal_quantile(0.1)).epsilon(1e-14));
    CHECK_THROWS_AS(normal_var(0.0, 0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(normal_rvar(0.0, -1.0, LevelPair(0.1, 0.9)), std::domain_error);

    CHECK(normal_rvar(0.0, 1.0, LevelPair(0.1, 0.9)) == doctest::Approx(0.0));

    // numeric integral of the quantile function over (alpha, beta)
    const LevelPair tail(0.01, 0.05);
    const double oracle =
        oracles::integrate([](double g) { return normal_quantile(g); }, 0.01, 0.05,
                           1e-12) /
        tail.width();
    CHECK(normal_rvar(0.0, 1.0, tail) == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(normal_rvar(0.0, 1.0, tail) == doctest::Approx(-1.9122).epsilon(1e-3));

    // Monte Carlo cross-check
    SplitMix64 rng(99);
    std::vector<double> draws(1000000);
    for (auto& d : draws) d = rng.next_normal();
    CHECK(empirical_rvar(Sample(draws), LevelPair(0.1, 0.9)) ==
          doctest::Approx(0.0).epsilon(0.01));
}

TEST_CASE("winsorized_mean") {
    // quantile positions are symmetric when n*a is not an integer
    const Sample sym({-2.0, -1.0, 0.0, 1.0, 2.0});
    CHECK(winsorized_mean(sym, 0.3) == doctest::Approx(0.0));

    // frozen from the defining combination: 0.6*5.5 + 0.2*2 + 0.2*8
    CHECK(winsorized_mean(one_to_ten(), 0.2) == doctest::Approx(5.3).epsilon(1e-12));

    CHECK(winsorized_mean(Sample({2.0, 2.0, 2.0, 2.0}), 0.25) == doctest::Approx(2.0));
    CHECK_THROWS_AS(winsorized_mean(sym, 0.5), std::domain_error);
    CHECK_THROWS_AS(winsorized_mean(sym, 0.0), std::domain_error);
}

TEST_CASE("trimmed_mean") {
    const Sample s = one_to_ten();
    CHECK(trimmed_mean(s, 0.2) == doctest::Approx(5.5).epsilon(1e-12));

    std::vector<double> outlier(10);
    std::iota(outlier.begin(), outlier.end(), 1.0);
    outlier[9] = 1e6;
    CHECK(trimmed_mean(Sample(outlier), 0.2) == doctest::Approx(5.5).epsilon(1e-12));

    CHECK(trimmed_mean(s, 1e-9) == doctest::Approx(5.5).epsilon(1e-6));
}

TEST_CASE("plug-in route equals quantile-integral oracle on random distributions") {
    SplitMix64 rng(2024);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t k = 1 + static_cast<std::size_t>(rng.next_u64() % 8);
        std::vector<double> pts(k), ms(k);
        double prev = -5.0, total = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            prev += 0.05 + 2.0 * rng.next_uniform();
            pts[i] = prev;
            ms[i] = 0.05 + rng.next_uniform();
            total += ms[i];
        }
        for (auto& m : ms) m /= total;
        // re-normalize exactly enough for the 1e-12 constructor gate
        double drift = std::accumulate(ms.begin(), ms.end(), 0.0) - 1.0;
        ms.back() -= drift;
        DiscreteDistribution d(pts, ms);

        double a = 0.02 + 0.9 * rng.next_uniform();
        double b = a + 0.01 + (0.98 - a) * rng.next_uniform();
        b = std::min(b, 0.995);
        const LevelPair levels(a, b);
        const double via_formula = distribution_rvar(d, levels);
        const double via_quantile =
            oracles::quantile_integral_rvar(d.points(), d.masses(), a, b);
        CHECK(std::fabs(via_formula - via_quantile) <= 1e-10);
    }
}

TEST_CASE("empirical_rvar equals the quantile integral of the empirical law") {
    SplitMix64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.next_u64() % 40);
        std::vector<double> v(n);
        for (auto& x : v)
            x = static_cast<double>(static_cast<int>(rng.next_u64() % 9)) - 4.0;  // ties
        Sample s(v);
        DiscreteDistribution d = empirical_distribution(s);

        double a = 0.02 + 0.9 * rng.next_uniform();
        double b = a + 0.01 + (0.98 - a) * rng.next_uniform();
        b = std::min(b, 0.995);
        const double direct = empirical_rvar(s, LevelPair(a, b));
        const double oracle =
            oracles::quantile_integral_rvar(d.points(), d.masses(), a, b);
        CHECK(std::fabs(direct - oracle) <= 1e-10);
    }
}

TEST_CASE("measure monotonicity and equivariance") {
    SplitMix64 rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.next_u64() % 30);
        std::vector<double> v(n);
        for (auto& x : v) x = 6.0 * rng.next_uniform() - 3.0;
        Sample s(v);

        double prev = empirical_var(s, 0.01);
        for (double g = 0.05; g < 1.0; g += 0.05) {
            const double cur = empirical_var(s, g);
            CHECK(cur >= prev);
            prev = cur;
        }

        double a = 0.05 + 0.5 * rng.next_uniform();
        double b = a + 0.05 + (0.9 - a) * rng.next_uniform();
        const LevelPair levels(a, b);
        const double r = empirical_rvar(s, levels);
        CHECK(empirical_var(s, a) <= r + 1e-12);
        CHECK(r <= empirical_var(s, b) + 1e-12);

        // translation and positive scaling
        const double c = 4.0 * rng.next_uniform() - 2.0;
        const double k = 0.1 + 3.0 * rng.next_uniform();
        std::vector<double> shifted(n), scaled(n);
        for (std::size_t i = 0; i < n; ++i) {
            shifted[i] = v[i] + c;
            scaled[i] = k * v[i];
        }
        Sample sh(shifted), sc(scaled);
        CHECK(empirical_rvar(sh, levels) == doctest::Approx(r + c).epsilon(1e-9));
        CHECK(empirical_var(sh, a) == doctest::Approx(empirical_var(s, a) + c));
        CHECK(empirical_rvar(sc, levels) == doctest::Approx(k * r).epsilon(1e-9));
        CHECK(empirical_es(sc, b) == doctest::Approx(k * empirical_es(s, b)).epsilon(1e-9));

        // ES-difference identity, exact
        const double lhs =
            (b * empirical_es(s, b) - a * empirical_es(s, a)) / (b - a);
        CHECK(lhs == doctest::Approx(r).epsilon(1e-12));
    }
}
