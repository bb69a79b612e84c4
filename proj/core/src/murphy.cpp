#include "rvar/murphy.hpp"

#include <algorithm>
#include <stdexcept>

#include "rvar/parallel.hpp"
#include "rvar/scoring.hpp"

namespace rvar {

double elementary1(const LevelPair& levels, double v, double x1, double y) {
    const double hit = y <= x1 ? 1.0 : 0.0;
    const double va = v <= x1 ? 1.0 : 0.0;
    const double vy = v <= y ? 1.0 : 0.0;
    return (hit - levels.alpha()) * (va - vy);
}

double elementary2(const LevelPair& levels, double v, double x2, double y) {
    const double hit = y <= x2 ? 1.0 : 0.0;
    const double va = v <= x2 ? 1.0 : 0.0;
    const double vy = v <= y ? 1.0 : 0.0;
    return (hit - levels.beta()) * (va - vy);
}

double elementary3(const LevelPair& levels, double v, const Triplet& t, double y) {
    const double a = levels.alpha();
    const double b = levels.beta();
    const double lam = b - a;
    const double v3 = v <= t.x3 ? 1.0 : 0.0;
    const double vy = v <= y ? 1.0 : 0.0;
    const double branch = v3 != 0.0 ? (pinball(b, t.x2, y) + b * y)
                                    : (pinball(a, t.x1, y) + a * y);
    return branch / lam + (v3 - vy) * (v - y);
}

std::vector<double> default_grid(const Sample& obs,
                                 std::span<const Triplet> forecasts,
                                 std::size_t m) {
    if (m < 2) throw std::invalid_argument("default_grid: m < 2");
    double lo = obs.sorted().front();
    double hi = obs.sorted().back();
    for (const auto& t : forecasts) {
        lo = std::min({lo, t.x1, t.x2, t.x3});
        hi = std::max({hi, t.x1, t.x2, t.x3});
    }
    if (lo == hi) {
        lo -= 1.0;
        hi += 1.0;
    } else {
        const double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
    std::vector<double> grid(m);
    for (std::size_t i = 0; i < m; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m - 1);
    return grid;
}

MurphyCurve murphy_curve(const LevelPair& levels,
                         std::span<const Triplet> forecasts, const Sample& obs,
                         std::vector<double> grid, unsigned threads) {
    if (forecasts.size() != obs.size())
        throw std::invalid_argument("murphy_curve: forecasts and obs length mismatch");
    if (grid.size() < 1) throw std::invalid_argument("murphy_curve: empty grid");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("murphy_curve: grid must be increasing");

    MurphyCurve curve;
    curve.n = obs.size();
    curve.grid = std::move(grid);
    curve.mean_scores.assign(curve.grid.size(), {0.0, 0.0, 0.0});

    const auto& ys = obs.values();
    const double inv_n = 1.0 / static_cast<double>(ys.size());
    parallel_for(curve.grid.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const double v = curve.grid[k];
            double s1 = 0.0, s2 = 0.0, s3 = 0.0;
            for (std::size_t t = 0; t < ys.size(); ++t) {
                s1 += elementary1(levels, v, forecasts[t].x1, ys[t]);
                s2 += elementary2(levels, v, forecasts[t].x2, ys[t]);
                s3 += elementary3(levels, v, forecasts[t], ys[t]);
            }
            curve.mean_scores[k] = {s1 * inv_n, s2 * inv_n, s3 * inv_n};
        }
    });
    return curve;
}

}  // namespace rvar
