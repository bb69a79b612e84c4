#ifndef RVAR_NORMAL_HPP
#define RVAR_NORMAL_HPP

namespace rvar {

/// Standard normal CDF, computed through erfc. Absolute error below 1e-15;
/// normal_cdf(0) == 0.5 exactly.
double normal_cdf(double x);

/// Standard normal density exp(-x^2/2)/sqrt(2*pi).
double normal_pdf(double x);

/// Standard normal quantile. Rational initial guess (Acklam) refined by one
/// Halley step against normal_cdf. Throws std::domain_error for p outside
/// (0,1).
double normal_quantile(double p);

}  // namespace rvar

#endif
