#ifndef RVAR_ESTIMATE_HPP
#define RVAR_ESTIMATE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rvar/discrete.hpp"
#include "rvar/levels.hpp"
#include "rvar/optim.hpp"
#include "rvar/sample.hpp"
#include "rvar/scoring.hpp"

namespace rvar {

/// Regression data: one covariate row per response.
struct Dataset {
    std::vector<std::vector<double>> covariates;  ///< n rows, d columns (d may be 0)
    std::vector<double> responses;

    std::size_t size() const { return responses.size(); }
    void validate() const;
};

/// Joint parametric model for the full triplet.
using JointModel =
    std::function<Triplet(std::span<const double> x, std::span<const double> theta)>;

/// Scalar parametric model for the interquantile expectation alone.
using ScalarModel =
    std::function<double(std::span<const double> x, std::span<const double> theta)>;

struct FitResult {
    std::vector<double> theta;
    double objective = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
    std::vector<double> restart_objectives;  ///< final value of every restart
};

/// Empirical M-estimation: minimize the mean score of the modelled triplet
/// over theta with a restarted derivative-free simplex search. The returned
/// estimate never scores worse than `init`. Throws if the objective turns
/// non-finite during the search.
FitResult m_estimate(const JointModel& model, const Dataset& data,
                     const ScoreSpec& spec, std::vector<double> init,
                     std::size_t budget = 60000);

/// Two-step trimmed least squares on the raw sample: the mean of the order
/// statistics with (1-based) indices ceil(n*alpha) .. floor(n*beta).
/// Throws when the index range is empty.
double tls_koenker_bassett(const Sample& s, const LevelPair& levels);

/// Least trimmed squares: minimize the sum of the floor(n*(1-2a)) smallest
/// squared residuals over theta. Non-convex with multiple local minima;
/// restarted simplex search under the evaluation budget.
FitResult lts_rousseeuw(const ScalarModel& model, const Dataset& data, double a,
                        std::vector<double> init, std::size_t budget = 60000);

/// Asymmetric trimmed least squares: minimize the sum of squared *signed*
/// residual order statistics with indices ceil(n*alpha) .. floor(n*beta).
FitResult tls_asymmetric(const ScalarModel& model, const Dataset& data,
                         const LevelPair& levels, std::vector<double> init,
                         std::size_t budget = 60000);

/// Outcome of checking whether the first-order condition of the two-corner
/// skipped-mean loss, with corners taken from the distribution's quantiles,
/// recovers the interquantile expectation. It does in the symmetric case and
/// generally does not otherwise.
struct HuberSkippedReport {
    double k1 = 0.0;        ///< upper-level quantile corner
    double k2 = 0.0;        ///< lower-level quantile corner
    double solution = 0.0;  ///< fixed point of the first-order condition
    double rvar = 0.0;      ///< interquantile expectation of the distribution
    double gap = 0.0;       ///< |solution - rvar|
    bool matches = false;   ///< gap <= 1e-6
    bool converged = false;
    std::size_t iterations = 0;
};

/// Check against N(mu, sigma^2).
HuberSkippedReport huber_skipped_check(const LevelPair& levels, double mu,
                                       double sigma);

/// Check against a finitely supported distribution.
HuberSkippedReport huber_skipped_check(const LevelPair& levels,
                                       const DiscreteDistribution& dist);

}  // namespace rvar

#endif
