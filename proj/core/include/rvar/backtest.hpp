#ifndef RVAR_BACKTEST_HPP
#define RVAR_BACKTEST_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rvar/scoring.hpp"

namespace rvar {

/// One-sided comparative test result for the null "first forecaster is at
/// most as bad as the second" (nonpositive mean score difference).
struct DMResult {
    double mean_diff = 0.0;
    double variance = 0.0;   ///< long-run variance estimate of d_t
    double statistic = 0.0;  ///< mean_diff / sqrt(variance / n)
    double p_value = 0.5;    ///< 1 - Phi(statistic)
    bool reject = false;
    double level = 0.05;
    std::size_t n = 0;
};

enum class VarianceMode { iid, hac };

/// d_t = S(f_t, y_t) - S(g_t, y_t). Throws on length mismatch.
std::vector<double> score_diff_series(const ScoreSpec& spec,
                                      std::span<const Triplet> f,
                                      std::span<const Triplet> g,
                                      std::span<const double> obs);

/// One-sided Diebold-Mariano test of H0: E[d_t] <= 0 at the given
/// significance level. `iid` uses the sample variance of d; `hac` uses
/// Newey-West with Bartlett weights and bandwidth floor(1.5 * n^(1/3)).
/// A degenerate all-equal series (variance zero) yields p = 0.5 for mean
/// zero and p = 0 or 1 by the sign of the mean. Throws if n < 2.
DMResult dm_test(std::span<const double> d, double level = 0.05,
                 VarianceMode mode = VarianceMode::iid);

struct PairwiseDM {
    std::string first;
    std::string second;
    DMResult result;
};

struct NamedForecasts {
    std::string name;
    std::vector<Triplet> forecasts;
};

/// DM test for every ordered pair of forecasters (diagonal omitted).
/// Throws with fewer than two forecasters or mismatched lengths.
std::vector<PairwiseDM> compare_all(const ScoreSpec& spec,
                                    std::span<const NamedForecasts> sets,
                                    std::span<const double> obs,
                                    double level = 0.05,
                                    VarianceMode mode = VarianceMode::iid);

}  // namespace rvar

#endif
