#ifndef RVAR_SCORING_HPP
#define RVAR_SCORING_HPP

#include <array>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "rvar/levels.hpp"
#include "rvar/triplet.hpp"

namespace rvar {

/// Asymmetric piecewise-linear quantile loss
/// (1{y <= x} - gamma) * x - 1{y <= x} * y.
double pinball(double gamma, double x, double y);

/// How the additive term a(y) of a score is chosen. `self_calibrated` fixes
/// a(y) so that the score of the perfect point forecast (y,y,y) is zero,
/// which is the normalization the elementary-score mixture representation
/// uses.
enum class APolicy { zero, self_calibrated };

/// A member of the consistent scoring family for the quantile/quantile/
/// interquantile-expectation triplet: two increasing-direction functions
/// g1, g2, a convex phi with subgradient phi_prime, a clamp cube
/// [clamp_min, clamp_max]^3 for the forecasts, and the a(y) policy.
struct ScoreSpec {
    LevelPair levels;
    std::function<double(double)> g1;
    std::function<double(double)> g2;
    std::function<double(double)> phi;
    std::function<double(double)> phi_prime;
    double clamp_min = -std::numeric_limits<double>::infinity();
    double clamp_max = std::numeric_limits<double>::infinity();
    APolicy a_policy = APolicy::self_calibrated;
};

enum class FamilyKind { s1_tanh, s2_arctan, s3_normal_cdf, s4_huber_like };

/// Selector for the four ready-made score families. c1 < c2 are the corner
/// parameters of the Huber-like family and are ignored by the others.
struct ScoreFamily {
    FamilyKind kind = FamilyKind::s1_tanh;
    double c1 = -12.0;
    double c2 = 12.0;
};

std::string family_label(const ScoreFamily& f);

/// Build the spec for one of the four stock families at the given levels:
/// g1 = g2 = identity, phi_prime as tabulated, phi the exact antiderivative
/// anchored at phi(0) = 0, self-calibrated a(y). The Huber-like family
/// additionally clamps forecasts to [c1, c2]. Throws if c1 >= c2.
ScoreSpec make_table1_spec(const ScoreFamily& family, const LevelPair& levels);

/// Evaluate the score at forecast t and outcome y. Coordinates outside the
/// clamp cube are clamped first; if `clamped` is non-null it is set to
/// whether any clamping occurred. Throws on non-finite y.
double score(const ScoreSpec& spec, const Triplet& t, double y,
             bool* clamped = nullptr);

/// Three-component identification function: the expectation over the true
/// distribution vanishes exactly at the true triplet.
std::array<double, 3> identification(const LevelPair& levels, const Triplet& t,
                                     double y);

/// Grid check of a spec against the structural conditions for consistency.
struct SpecValidation {
    bool phi_convex = false;        ///< phi_prime nondecreasing on the grid
    bool g_monotone = false;        ///< G1, G2 nondecreasing for every grid x3
    bool strictly_convex = false;
    bool strictly_monotone = false;
    bool phi_prime_bounded = false; ///< sup |phi'| <= beta - alpha
    double sup_abs_phi_prime = 0.0;
    double bound = 0.0;             ///< beta - alpha
    bool valid = false;             ///< phi_convex && g_monotone
    bool strict = false;            ///< strictly_convex && strictly_monotone
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::vector<std::string> failures;
};

/// Validate on `grid_size` equispaced points covering the clamp interval
/// intersected with [-window, window].
SpecValidation validate_spec(const ScoreSpec& spec, std::size_t grid_size = 201,
                             double window = 20.0);

/// Strongly equivalent rescaling: shift phi by c*x (with the compensating
/// g-shifts that leave the score unchanged) so that the subgradient becomes
/// symmetric on the grid, then scale so sup phi' = -inf phi' = beta - alpha.
/// Score values of input and output differ by one positive factor uniformly.
/// Throws if phi is constant on the grid.
ScoreSpec normalize_spec(const ScoreSpec& spec, std::size_t grid_size = 201,
                         double window = 20.0);

}  // namespace rvar

#endif
