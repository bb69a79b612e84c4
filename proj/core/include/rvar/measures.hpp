#ifndef RVAR_MEASURES_HPP
#define RVAR_MEASURES_HPP

#include "rvar/discrete.hpp"
#include "rvar/levels.hpp"
#include "rvar/sample.hpp"

namespace rvar {

/// Lower empirical quantile at level gamma: the ceil(n*gamma)-th order
/// statistic (the left-continuous inverse of the empirical CDF).
double empirical_var(const Sample& s, double gamma);

/// Interquantile expectation of the empirical distribution, computed with
/// exact overlap weights: each order statistic y_(i) carries the Lebesgue
/// measure of ((i-1)/n, i/n] intersected with (alpha, beta]. This equals the
/// definitional integral of the quantile function and varies continuously in
/// the levels, unlike index-truncation estimators.
double empirical_rvar(const Sample& s, const LevelPair& levels);

/// Interquantile expectation of a finitely supported distribution via the
/// partial-expectation representation with its two boundary correction terms.
double distribution_rvar(const DiscreteDistribution& d, const LevelPair& levels);

/// Lower-tail mean below the gamma-quantile (the alpha -> 0 limit of
/// empirical_rvar).
double empirical_es(const Sample& s, double gamma);

/// Quantile of N(mu, sigma^2).
double normal_var(double mu, double sigma, double gamma);

/// Interquantile expectation of N(mu, sigma^2):
/// mu - sigma * (pdf(q_beta) - pdf(q_alpha)) / (beta - alpha).
double normal_rvar(double mu, double sigma, const LevelPair& levels);

/// Winsorized mean at trim fraction a in (0, 1/2):
/// (1-2a) * rvar(a, 1-a) + a * var(a) + a * var(1-a).
double winsorized_mean(const Sample& s, double a);

/// Symmetric trimmed mean: rvar at levels (a, 1-a), a in (0, 1/2).
double trimmed_mean(const Sample& s, double a);

}  // namespace rvar

#endif
