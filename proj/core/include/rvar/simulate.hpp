#ifndef RVAR_SIMULATE_HPP
#define RVAR_SIMULATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rvar/backtest.hpp"
#include "rvar/levels.hpp"
#include "rvar/murphy.hpp"
#include "rvar/rng.hpp"
#include "rvar/scoring.hpp"
#include "rvar/triplet.hpp"

namespace rvar {

/// Simulation study configuration. A fixed seed makes every output
/// bit-identical across runs and thread counts: each replication draws from
/// its own derived splitmix64 stream and aggregation reduces integer counts.
struct ExperimentConfig {
    LevelPair levels{0.1, 0.9};
    std::size_t n = 250;        ///< observations per replication
    std::size_t reps = 10000;
    double sigma = 0.5;         ///< noise s.d. of the perturbed forecaster
    std::uint64_t seed = 1;
    std::vector<ScoreFamily> families;
    double dm_level = 0.05;
    std::size_t murphy_n = 100000;
    std::size_t murphy_grid = 501;
    std::vector<double> murphy_sigmas{0.3, 0.5, 0.8};
    unsigned threads = 0;

    void validate() const;
};

/// Ordered one-sided hypotheses among the three forecasters, in the fixed
/// row order f<=g, g<=f, f<=h, h<=f, g<=h, h<=g.
enum class Hypothesis { f_le_g, g_le_f, f_le_h, h_le_f, g_le_h, h_le_g };
constexpr std::size_t kHypothesisCount = 6;
std::string hypothesis_label(Hypothesis h);

struct PowerTable {
    std::vector<std::string> rows;            ///< hypothesis labels
    std::vector<std::string> columns;         ///< family labels
    std::vector<std::vector<double>> rates;   ///< rows x columns

    double rate(Hypothesis h, std::size_t family_index) const {
        return rates[static_cast<std::size_t>(h)][family_index];
    }
};

/// Draw the conditional means and observations of the location-mixture DGP:
/// y_t = mu_t + u_t with mu_t, u_t independent standard normal. Consumes two
/// stream values per t in the order (mu_t, u_t).
std::pair<std::vector<double>, std::vector<double>> dgp_sample(std::size_t n,
                                                               SplitMix64& rng);

/// The informed forecaster: exact triplet of N(mu_t, 1).
Triplet forecaster_f(double mu_t, const LevelPair& levels);

/// The noisy forecaster: the informed triplet shifted by eps_t in every
/// coordinate.
Triplet forecaster_g(const Triplet& f_t, double eps_t);

/// The climatological forecaster: exact triplet of the unconditional N(0,2),
/// constant over time.
Triplet forecaster_h(const LevelPair& levels);

/// Rejection rates of one-sided DM tests for all six ordered hypotheses
/// under each configured score family. Deterministic given the seed.
PowerTable run_power_study(const ExperimentConfig& cfg);

struct MurphyStudy {
    std::vector<double> grid;
    std::vector<std::pair<std::string, MurphyCurve>> curves;  ///< f, g@sigmas, h
};

/// One sample of size murphy_n scored by the elementary-score curves for the
/// informed forecaster, the noisy forecaster at each configured sigma, and
/// the climatological forecaster, all on a common threshold grid.
MurphyStudy run_murphy_study(const ExperimentConfig& cfg);

}  // namespace rvar

#endif
