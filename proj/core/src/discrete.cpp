#include "rvar/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rvar {

DiscreteDistribution::DiscreteDistribution(std::vector<double> points,
                                           std::vector<double> masses)
    : points_(std::move(points)), masses_(std::move(masses)) {
    if (points_.empty() || points_.size() != masses_.size())
        throw std::invalid_argument("DiscreteDistribution: bad atom list");
    double total = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i]))
            throw std::invalid_argument("DiscreteDistribution: non-finite point");
        if (i > 0 && !(points_[i - 1] < points_[i]))
            throw std::invalid_argument(
                "DiscreteDistribution: points must be strictly increasing");
        if (!(masses_[i] > 0.0))
            throw std::invalid_argument("DiscreteDistribution: masses must be positive");
        total += masses_[i];
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw std::invalid_argument("DiscreteDistribution: masses must sum to 1");
    cumulative_.resize(points_.size());
    double run = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        run += masses_[i];
        cumulative_[i] = run;
    }
    cumulative_.back() = 1.0;
}

double DiscreteDistribution::cdf(double x) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), x);
    if (it == points_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double DiscreteDistribution::var(double gamma) const {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::domain_error("DiscreteDistribution::var: gamma must lie in (0,1)");
    auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), gamma);
    if (it == cumulative_.end()) return points_.back();
    return points_[static_cast<std::size_t>(it - cumulative_.begin())];
}

double DiscreteDistribution::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) m += points_[i] * masses_[i];
    return m;
}

double DiscreteDistribution::partial_expectation(double lo, double hi) const {
    double m = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] > lo && points_[i] <= hi) m += points_[i] * masses_[i];
    return m;
}

double DiscreteDistribution::interval_mass(double lo, double hi) const {
    double m = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] > lo && points_[i] <= hi) m += masses_[i];
    return m;
}

}  // namespace rvar
