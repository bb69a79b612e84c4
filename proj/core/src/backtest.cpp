#include "rvar/backtest.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rvar/normal.hpp"

namespace rvar {

std::vector<double> score_diff_series(const ScoreSpec& spec,
                                      std::span<const Triplet> f,
                                      std::span<const Triplet> g,
                                      std::span<const double> obs) {
    if (f.size() != g.size() || f.size() != obs.size())
        throw std::invalid_argument("score_diff_series: length mismatch");
    std::vector<double> d(f.size());
    for (std::size_t t = 0; t < f.size(); ++t)
        d[t] = score(spec, f[t], obs[t]) - score(spec, g[t], obs[t]);
    return d;
}

DMResult dm_test(std::span<const double> d, double level, VarianceMode mode) {
    const std::size_t n = d.size();
    if (n < 2) throw std::invalid_argument("dm_test: need n >= 2");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("dm_test: level must lie in (0,1)");

    DMResult res;
    res.level = level;
    res.n = n;

    double mean = 0.0;
    for (double x : d) mean += x;
    mean /= static_cast<double>(n);
    res.mean_diff = mean;

    double variance = 0.0;
    if (mode == VarianceMode::iid) {
        double ss = 0.0;
        for (double x : d) ss += (x - mean) * (x - mean);
        variance = ss / static_cast<double>(n - 1);
    } else {
        // Newey-West long-run variance with Bartlett weights; nonnegative by
        // construction.
        const auto bw = static_cast<std::size_t>(
            std::floor(1.5 * std::cbrt(static_cast<double>(n))));
        auto acov = [&](std::size_t k) {
            double s = 0.0;
            for (std::size_t t = k; t < n; ++t)
                s += (d[t] - mean) * (d[t - k] - mean);
            return s / static_cast<double>(n);
        };
        variance = acov(0);
        for (std::size_t k = 1; k <= bw && k < n; ++k) {
            const double w =
                1.0 - static_cast<double>(k) / static_cast<double>(bw + 1);
            variance += 2.0 * w * acov(k);
        }
        variance = std::max(variance, 0.0);
    }
    res.variance = variance;

    const double crit = normal_quantile(1.0 - level);
    if (variance > 0.0) {
        res.statistic = mean / std::sqrt(variance / static_cast<double>(n));
        res.p_value = 1.0 - normal_cdf(res.statistic);
        res.reject = res.statistic > crit;
    } else if (mean > 0.0) {
        res.statistic = std::numeric_limits<double>::infinity();
        res.p_value = 0.0;
        res.reject = true;
    } else if (mean < 0.0) {
        res.statistic = -std::numeric_limits<double>::infinity();
        res.p_value = 1.0;
        res.reject = false;
    } else {
        res.statistic = 0.0;
        res.p_value = 0.5;
        res.reject = false;
    }
    return res;
}

std::vector<PairwiseDM> compare_all(const ScoreSpec& spec,
                                    std::span<const NamedForecasts> sets,
                                    std::span<const double> obs, double level,
                                    VarianceMode mode) {
    if (sets.size() < 2)
        throw std::invalid_argument("compare_all: need at least two forecasters");
    for (const auto& s : sets)
        if (s.forecasts.size() != obs.size())
            throw std::invalid_argument("compare_all: length mismatch for " + s.name);

    std::vector<PairwiseDM> out;
    out.reserve(sets.size() * (sets.size() - 1));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            auto d = score_diff_series(spec, sets[i].forecasts, sets[j].forecasts, obs);
            out.push_back({sets[i].name, sets[j].name, dm_test(d, level, mode)});
        }
    }
    return out;
}

}  // namespace rvar
