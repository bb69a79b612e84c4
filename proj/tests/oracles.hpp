// Test-only oracles, kept independent of the implementation paths they are
// used to check.
#ifndef RVAR_TESTS_ORACLES_HPP
#define RVAR_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

// Adaptive Simpson quadrature.
inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-10, int depth = 48) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Integrate with the integrand split at the given interior kink locations.
inline double integrate_split(const std::function<double(double)>& f, double a,
                              double b, std::vector<double> kinks,
                              double tol = 1e-10) {
    kinks.push_back(a);
    kinks.push_back(b);
    std::sort(kinks.begin(), kinks.end());
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < kinks.size(); ++i) {
        const double lo = std::max(a, kinks[i]);
        const double hi = std::min(b, kinks[i + 1]);
        if (hi > lo) acc += integrate(f, lo, hi, tol);
    }
    return acc;
}

// Standard normal CDF by quadrature of the density; independent of erfc.
inline double normal_cdf_quadrature(double x) {
    const double inv_sqrt_2pi = 0.3989422804014326779399460599343819;
    auto pdf = [&](double t) { return inv_sqrt_2pi * std::exp(-0.5 * t * t); };
    if (x < -9.0) return 0.0;
    if (x > 9.0) return 1.0;
    return 0.5 + integrate(pdf, 0.0, x, 1e-13, 60);
}

// Interquantile expectation of a finitely supported distribution by direct
// integration of its quantile function: the quantile equals points[k] on the
// cumulative-mass band (C_{k-1}, C_k], so the integral over (alpha, beta) is
// an exact sum of band overlaps.
inline double quantile_integral_rvar(const std::vector<double>& points,
                                     const std::vector<double>& masses,
                                     double alpha, double beta) {
    if (points.size() != masses.size() || points.empty())
        throw std::invalid_argument("quantile_integral_rvar: bad atoms");
    double acc = 0.0;
    double c_prev = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const double c_next = k + 1 == points.size() ? 1.0 : c_prev + masses[k];
        const double w = std::min(c_next, beta) - std::max(c_prev, alpha);
        if (w > 0.0) acc += w * points[k];
        c_prev = c_next;
    }
    return acc / (beta - alpha);
}

}  // namespace oracles

#endif
