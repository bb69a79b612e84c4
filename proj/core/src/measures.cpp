#include "rvar/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rvar/normal.hpp"

namespace rvar {

namespace {

// Weighted mean of order statistics where y_(i) carries
// |((i-1)/n, i/n] ∩ (lo, hi]|, normalized by hi - lo.
double quantile_band_mean(const Sample& s, double lo, double hi) {
    const auto& ys = s.sorted();
    const double n = static_cast<double>(ys.size());
    const std::size_t first = static_cast<std::size_t>(
        std::max(0.0, std::floor(lo * n)));
    double acc = 0.0;
    for (std::size_t i = first; i < ys.size(); ++i) {
        const double cell_lo = static_cast<double>(i) / n;
        const double cell_hi = static_cast<double>(i + 1) / n;
        if (cell_lo >= hi) break;
        const double w = std::min(cell_hi, hi) - std::max(cell_lo, lo);
        if (w > 0.0) acc += w * ys[i];
    }
    return acc / (hi - lo);
}

}  // namespace

double empirical_var(const Sample& s, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::domain_error("empirical_var: gamma must lie in (0,1)");
    const auto& ys = s.sorted();
    const double n = static_cast<double>(ys.size());
    std::size_t k = static_cast<std::size_t>(std::ceil(gamma * n));
    if (k < 1) k = 1;
    if (k > ys.size()) k = ys.size();
    return ys[k - 1];
}

double empirical_rvar(const Sample& s, const LevelPair& levels) {
    return quantile_band_mean(s, levels.alpha(), levels.beta());
}

double distribution_rvar(const DiscreteDistribution& d, const LevelPair& levels) {
    const double a = levels.alpha();
    const double b = levels.beta();
    const double va = d.var(a);
    const double vb = d.var(b);
    const double interior = d.partial_expectation(va, vb);
    const double correction = va * (d.cdf(va) - a) - vb * (d.cdf(vb) - b);
    return (interior + correction) / (b - a);
}

double empirical_es(const Sample& s, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::domain_error("empirical_es: gamma must lie in (0,1)");
    return quantile_band_mean(s, 0.0, gamma);
}

double normal_var(double mu, double sigma, double gamma) {
    if (!(sigma > 0.0)) throw std::domain_error("normal_var: sigma must be positive");
    return mu + sigma * normal_quantile(gamma);
}

double normal_rvar(double mu, double sigma, const LevelPair& levels) {
    if (!(sigma > 0.0)) throw std::domain_error("normal_rvar: sigma must be positive");
    const double qa = normal_quantile(levels.alpha());
    const double qb = normal_quantile(levels.beta());
    return mu - sigma * (normal_pdf(qb) - normal_pdf(qa)) / levels.width();
}

double winsorized_mean(const Sample& s, double a) {
    if (!(a > 0.0 && a < 0.5))
        throw std::domain_error("winsorized_mean: a must lie in (0, 1/2)");
    const LevelPair band(a, 1.0 - a);
    return (1.0 - 2.0 * a) * empirical_rvar(s, band) + a * empirical_var(s, a) +
           a * empirical_var(s, 1.0 - a);
}

double trimmed_mean(const Sample& s, double a) {
    if (!(a > 0.0 && a < 0.5))
        throw std::domain_error("trimmed_mean: a must lie in (0, 1/2)");
    return empirical_rvar(s, LevelPair(a, 1.0 - a));
}

}  // namespace rvar
