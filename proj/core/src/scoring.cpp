#include "rvar/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rvar/normal.hpp"

namespace rvar {

double pinball(double gamma, double x, double y) {
    const double hit = y <= x ? 1.0 : 0.0;
    return (hit - gamma) * x - hit * y;
}

std::string family_label(const ScoreFamily& f) {
    switch (f.kind) {
        case FamilyKind::s1_tanh: return "S1";
        case FamilyKind::s2_arctan: return "S2";
        case FamilyKind::s3_normal_cdf: return "S3";
        case FamilyKind::s4_huber_like: return "S4";
    }
    return "?";
}

namespace {

double log_cosh(double z) {
    // log(cosh z) = |z| + log1p(exp(-2|z|)) - log 2, overflow-free.
    const double az = std::fabs(z);
    return az + std::log1p(std::exp(-2.0 * az)) - 0.6931471805599453094172321;
}

}  // namespace

ScoreSpec make_table1_spec(const ScoreFamily& family, const LevelPair& levels) {
    const double lam = levels.width();
    auto identity = [](double x) { return x; };
    ScoreSpec spec{levels, identity, identity, nullptr, nullptr};

    switch (family.kind) {
        case FamilyKind::s1_tanh:
            spec.phi_prime = [lam](double x) { return lam * std::tanh(lam * x); };
            spec.phi = [lam](double x) { return log_cosh(lam * x); };
            break;
        case FamilyKind::s2_arctan:
            spec.phi_prime = [lam](double x) {
                return lam * (2.0 / M_PI) * std::atan(lam * x);
            };
            spec.phi = [lam](double x) {
                const double z = lam * x;
                return (2.0 / M_PI) * (z * std::atan(z) - 0.5 * std::log1p(z * z));
            };
            break;
        case FamilyKind::s3_normal_cdf:
            spec.phi_prime = [lam](double x) {
                return lam * (2.0 * normal_cdf(lam * x) - 1.0);
            };
            spec.phi = [lam](double x) {
                const double z = lam * x;
                return z * (2.0 * normal_cdf(z) - 1.0) +
                       2.0 * (normal_pdf(z) - normal_pdf(0.0));
            };
            break;
        case FamilyKind::s4_huber_like: {
            const double c1 = family.c1;
            const double c2 = family.c2;
            if (!(c1 < c2))
                throw std::invalid_argument("make_table1_spec: S4 needs c1 < c2");
            const double mid = 0.5 * (c1 + c2);
            const double h = c2 - c1;
            auto slope = [c1, c2, mid, h](double x) {
                if (x < c1) return -1.0;
                if (x > c2) return 1.0;
                return 2.0 * (x - mid) / h;
            };
            // Antiderivative of `slope`, continuous across the corners.
            auto ramp = [c1, c2, mid, h](double x) {
                if (x < c1) return 0.25 * h + (c1 - x);
                if (x > c2) return 0.25 * h + (x - c2);
                return (x - mid) * (x - mid) / h;
            };
            const double anchor = ramp(0.0);
            spec.phi_prime = [lam, slope](double x) { return lam * slope(x); };
            spec.phi = [lam, ramp, anchor](double x) { return lam * (ramp(x) - anchor); };
            spec.clamp_min = c1;
            spec.clamp_max = c2;
            break;
        }
    }
    return spec;
}

namespace {

// Score with a(y) = 0 and no clamping.
double raw_score(const ScoreSpec& spec, double x1, double x2, double x3, double y) {
    const double a = spec.levels.alpha();
    const double b = spec.levels.beta();
    const double lam = b - a;
    const double hit1 = y <= x1 ? 1.0 : 0.0;
    const double hit2 = y <= x2 ? 1.0 : 0.0;
    return (hit1 - a) * spec.g1(x1) - hit1 * spec.g1(y) +
           (hit2 - b) * spec.g2(x2) - hit2 * spec.g2(y) +
           spec.phi_prime(x3) *
               (x3 + (pinball(b, x2, y) - pinball(a, x1, y)) / lam) -
           spec.phi(x3);
}

}  // namespace

double score(const ScoreSpec& spec, const Triplet& t, double y, bool* clamped) {
    if (!std::isfinite(y)) throw std::invalid_argument("score: non-finite y");
    const double x1 = std::clamp(t.x1, spec.clamp_min, spec.clamp_max);
    const double x2 = std::clamp(t.x2, spec.clamp_min, spec.clamp_max);
    const double x3 = std::clamp(t.x3, spec.clamp_min, spec.clamp_max);
    if (clamped) *clamped = (x1 != t.x1) || (x2 != t.x2) || (x3 != t.x3);
    double s = raw_score(spec, x1, x2, x3, y);
    if (spec.a_policy == APolicy::self_calibrated)
        s -= raw_score(spec, y, y, y, y);
    return s;
}

std::array<double, 3> identification(const LevelPair& levels, const Triplet& t,
                                     double y) {
    const double a = levels.alpha();
    const double b = levels.beta();
    const double hit1 = y <= t.x1 ? 1.0 : 0.0;
    const double hit2 = y <= t.x2 ? 1.0 : 0.0;
    return {hit1 - a, hit2 - b,
            t.x3 + (pinball(b, t.x2, y) - pinball(a, t.x1, y)) / (b - a)};
}

SpecValidation validate_spec(const ScoreSpec& spec, std::size_t grid_size,
                             double window) {
    if (grid_size < 2) throw std::invalid_argument("validate_spec: grid_size < 2");
    SpecValidation rep;
    rep.bound = spec.levels.width();
    rep.window_lo = std::max(spec.clamp_min, -window);
    rep.window_hi = std::min(spec.clamp_max, window);
    if (!(rep.window_lo < rep.window_hi))
        throw std::invalid_argument("validate_spec: empty evaluation window");

    std::vector<double> xs(grid_size);
    const double step = (rep.window_hi - rep.window_lo) / static_cast<double>(grid_size - 1);
    for (std::size_t i = 0; i < grid_size; ++i)
        xs[i] = rep.window_lo + step * static_cast<double>(i);

    std::vector<double> pp(grid_size), gg1(grid_size), gg2(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        pp[i] = spec.phi_prime(xs[i]);
        gg1[i] = spec.g1(xs[i]);
        gg2[i] = spec.g2(xs[i]);
    }

    double pmin = pp[0], pmax = pp[0];
    rep.phi_convex = true;
    rep.strictly_convex = true;
    for (std::size_t i = 0; i + 1 < grid_size; ++i) {
        const double d = pp[i + 1] - pp[i];
        if (d < 0.0) rep.phi_convex = false;
        if (!(d > 0.0)) rep.strictly_convex = false;
        pmin = std::min(pmin, pp[i + 1]);
        pmax = std::max(pmax, pp[i + 1]);
    }
    if (!rep.phi_convex) rep.failures.push_back("phi_prime decreases on the grid");
    rep.sup_abs_phi_prime = std::max(std::fabs(pmin), std::fabs(pmax));
    rep.phi_prime_bounded = rep.sup_abs_phi_prime <= rep.bound * (1.0 + 1e-12);

    // G1 is worst at the largest phi', G2 at the smallest.
    rep.g_monotone = true;
    rep.strictly_monotone = true;
    bool g1_fail = false, g2_fail = false;
    for (std::size_t i = 0; i + 1 < grid_size; ++i) {
        const double dx = xs[i + 1] - xs[i];
        const double d1 = gg1[i + 1] - gg1[i] - dx * pmax / rep.bound;
        const double d2 = gg2[i + 1] - gg2[i] + dx * pmin / rep.bound;
        if (d1 < 0.0) { rep.g_monotone = false; g1_fail = true; }
        if (d2 < 0.0) { rep.g_monotone = false; g2_fail = true; }
        if (!(d1 > 0.0) || !(d2 > 0.0)) rep.strictly_monotone = false;
    }
    if (g1_fail) rep.failures.push_back("G1 decreases for some grid x3");
    if (g2_fail) rep.failures.push_back("G2 decreases for some grid x3");

    rep.valid = rep.phi_convex && rep.g_monotone;
    rep.strict = rep.strictly_convex && rep.strictly_monotone;
    return rep;
}

ScoreSpec normalize_spec(const ScoreSpec& spec, std::size_t grid_size, double window) {
    const double lo = std::max(spec.clamp_min, -window);
    const double hi = std::min(spec.clamp_max, window);
    if (!(lo < hi)) throw std::invalid_argument("normalize_spec: empty window");
    double pmin = spec.phi_prime(lo), pmax = pmin;
    for (std::size_t i = 1; i < grid_size; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) /
                                  static_cast<double>(grid_size - 1);
        const double p = spec.phi_prime(x);
        pmin = std::min(pmin, p);
        pmax = std::max(pmax, p);
    }
    if (!(pmax > pmin))
        throw std::invalid_argument("normalize_spec: phi is constant, no scale defined");

    const double lam = spec.levels.width();
    const double shift = -0.5 * (pmax + pmin);
    const double scale = lam / (0.5 * (pmax - pmin));

    ScoreSpec out = spec;
    out.g1 = [g = spec.g1, shift, lam, scale](double x) {
        return scale * (g(x) + shift * x / lam);
    };
    out.g2 = [g = spec.g2, shift, lam, scale](double x) {
        return scale * (g(x) - shift * x / lam);
    };
    out.phi = [p = spec.phi, shift, scale](double x) {
        return scale * (p(x) + shift * x);
    };
    out.phi_prime = [p = spec.phi_prime, shift, scale](double x) {
        return scale * (p(x) + shift);
    };
    return out;
}

}  // namespace rvar
