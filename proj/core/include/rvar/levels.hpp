#ifndef RVAR_LEVELS_HPP
#define RVAR_LEVELS_HPP

#include <cmath>
#include <stdexcept>

namespace rvar {

/// A pair of probability levels 0 < alpha < beta < 1. Every quantity in this
/// library is parameterized by such a pair; construction enforces the strict
/// ordering so downstream code never has to re-check it.
class LevelPair {
public:
    LevelPair(double alpha, double beta) : alpha_(alpha), beta_(beta) {
        if (!(std::isfinite(alpha) && std::isfinite(beta)))
            throw std::invalid_argument("LevelPair: levels must be finite");
        if (!(0.0 < alpha && alpha < beta && beta < 1.0))
            throw std::invalid_argument("LevelPair: need 0 < alpha < beta < 1");
    }

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    /// beta - alpha, the normalizing width used throughout.
    double width() const { return beta_ - alpha_; }

private:
    double alpha_;
    double beta_;
};

}  // namespace rvar

#endif
