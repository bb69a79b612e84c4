#ifndef RVAR_DISCRETE_HPP
#define RVAR_DISCRETE_HPP

#include <cstddef>
#include <vector>

namespace rvar {

/// A finitely supported distribution given by strictly increasing points and
/// positive masses summing to one (within 1e-12).
class DiscreteDistribution {
public:
    DiscreteDistribution(std::vector<double> points, std::vector<double> masses);

    const std::vector<double>& points() const { return points_; }
    const std::vector<double>& masses() const { return masses_; }
    /// Cumulative masses; back() is forced to exactly 1.
    const std::vector<double>& cumulative() const { return cumulative_; }
    std::size_t size() const { return points_.size(); }

    /// F(x): total mass at or below x.
    double cdf(double x) const;

    /// Lower quantile: the smallest support point with cdf >= gamma,
    /// gamma in (0,1).
    double var(double gamma) const;

    /// Mean of the distribution.
    double mean() const;

    /// E[Y 1{lo < Y <= hi}].
    double partial_expectation(double lo, double hi) const;

    /// Mass of (lo, hi].
    double interval_mass(double lo, double hi) const;

private:
    std::vector<double> points_;
    std::vector<double> masses_;
    std::vector<double> cumulative_;
};

}  // namespace rvar

#endif
