#ifndef RVAR_MURPHY_HPP
#define RVAR_MURPHY_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "rvar/levels.hpp"
#include "rvar/sample.hpp"
#include "rvar/triplet.hpp"

namespace rvar {

/// Elementary score for the lower quantile at threshold v. Nonnegative;
/// vanishes unless v lies strictly between x1 and y (inclusive on the upper
/// side).
double elementary1(const LevelPair& levels, double v, double x1, double y);

/// Elementary score for the upper quantile at threshold v.
double elementary2(const LevelPair& levels, double v, double x2, double y);

/// Elementary score for the full triplet at threshold v. This is the member
/// of the consistent family with g1(x) = g2(x) = x/(2(beta-alpha)) and
/// phi(x) = |x-v|/2, normalized to vanish at perfect forecasts; in
/// particular it is nonnegative.
double elementary3(const LevelPair& levels, double v, const Triplet& t, double y);

/// Mean elementary scores per threshold: one Murphy-diagram curve per
/// component.
struct MurphyCurve {
    std::vector<double> grid;                      ///< thresholds, increasing
    std::vector<std::array<double, 3>> mean_scores;///< per threshold: L1, L2, L3
    std::size_t n = 0;                             ///< observations averaged
};

/// m equispaced thresholds spanning the pooled range of observations and all
/// forecast coordinates, padded by 5% of the range on both sides. A
/// degenerate pooled range (all values equal c) falls back to [c-1, c+1].
/// Throws if m < 2.
std::vector<double> default_grid(const Sample& obs,
                                 std::span<const Triplet> forecasts,
                                 std::size_t m = 501);

/// Across-time means of the three elementary scores at each grid threshold.
/// Grid points are evaluated concurrently; the result does not depend on the
/// thread count. Throws on length mismatch.
MurphyCurve murphy_curve(const LevelPair& levels,
                         std::span<const Triplet> forecasts, const Sample& obs,
                         std::vector<double> grid, unsigned threads = 0);

}  // namespace rvar

#endif
