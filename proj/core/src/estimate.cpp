#include "rvar/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "rvar/measures.hpp"
#include "rvar/normal.hpp"

namespace rvar {

void Dataset::validate() const {
    if (responses.empty()) throw std::invalid_argument("Dataset: empty");
    if (!covariates.empty() && covariates.size() != responses.size())
        throw std::invalid_argument("Dataset: row count mismatch");
    for (double y : responses)
        if (!std::isfinite(y)) throw std::invalid_argument("Dataset: non-finite response");
    for (const auto& row : covariates)
        for (double x : row)
            if (!std::isfinite(x))
                throw std::invalid_argument("Dataset: non-finite covariate");
}

namespace {

std::span<const double> row_of(const Dataset& data, std::size_t t) {
    static const std::vector<double> empty;
    return data.covariates.empty() ? std::span<const double>(empty)
                                   : std::span<const double>(data.covariates[t]);
}

[[noreturn]] void throw_nonfinite(const std::vector<double>& theta) {
    std::ostringstream os;
    os << "objective became non-finite at theta = (";
    for (std::size_t i = 0; i < theta.size(); ++i)
        os << (i ? ", " : "") << theta[i];
    os << ")";
    throw std::runtime_error(os.str());
}

FitResult run_fit(const Objective& objective, std::vector<double> init,
                  std::size_t budget) {
    if (budget < 1) throw std::invalid_argument("estimate: budget must be >= 1");
    MultiStartOptions opts;
    opts.budget = budget;
    auto fit = multi_start_nelder_mead(objective, init, opts);
    FitResult out;
    out.theta = std::move(fit.x);
    out.objective = fit.fx;
    out.evaluations = fit.evals;
    out.converged = fit.converged;
    out.restart_objectives = std::move(fit.restart_values);
    return out;
}

}  // namespace

FitResult m_estimate(const JointModel& model, const Dataset& data,
                     const ScoreSpec& spec, std::vector<double> init,
                     std::size_t budget) {
    data.validate();
    const std::size_t n = data.size();
    Objective objective = [&](const std::vector<double>& theta) {
        double acc = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            const Triplet pred = model(row_of(data, t), theta);
            acc += score(spec, pred, data.responses[t]);
        }
        const double mean = acc / static_cast<double>(n);
        if (!std::isfinite(mean)) throw_nonfinite(theta);
        return mean;
    };
    return run_fit(objective, std::move(init), budget);
}

double tls_koenker_bassett(const Sample& s, const LevelPair& levels) {
    const auto& ys = s.sorted();
    const double n = static_cast<double>(ys.size());
    const auto lo = static_cast<std::size_t>(std::ceil(levels.alpha() * n));
    const auto hi = static_cast<std::size_t>(std::floor(levels.beta() * n));
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("tls_koenker_bassett: empty order-statistic range");
    double acc = 0.0;
    for (std::size_t i = lo; i <= hi; ++i) acc += ys[i - 1];
    return acc / static_cast<double>(hi - lo + 1);
}

FitResult lts_rousseeuw(const ScalarModel& model, const Dataset& data, double a,
                        std::vector<double> init, std::size_t budget) {
    data.validate();
    if (!(a > 0.0 && a < 0.5))
        throw std::invalid_argument("lts_rousseeuw: a must lie in (0, 1/2)");
    const std::size_t n = data.size();
    const auto keep = static_cast<std::size_t>(
        std::floor((1.0 - 2.0 * a) * static_cast<double>(n)));
    if (keep < 1) throw std::invalid_argument("lts_rousseeuw: trimmed count < 1");

    Objective objective = [&, keep](const std::vector<double>& theta) {
        std::vector<double> sq(n);
        for (std::size_t t = 0; t < n; ++t) {
            const double r = data.responses[t] - model(row_of(data, t), theta);
            sq[t] = r * r;
        }
        std::nth_element(sq.begin(), sq.begin() + static_cast<std::ptrdiff_t>(keep - 1),
                         sq.end());
        double acc = 0.0;
        for (std::size_t i = 0; i < keep; ++i) acc += sq[i];
        const double mean = acc / static_cast<double>(n);
        if (!std::isfinite(mean)) throw_nonfinite(theta);
        return mean;
    };
    return run_fit(objective, std::move(init), budget);
}

FitResult tls_asymmetric(const ScalarModel& model, const Dataset& data,
                         const LevelPair& levels, std::vector<double> init,
                         std::size_t budget) {
    data.validate();
    const std::size_t n = data.size();
    const auto lo = static_cast<std::size_t>(
        std::ceil(levels.alpha() * static_cast<double>(n)));
    const auto hi = static_cast<std::size_t>(
        std::floor(levels.beta() * static_cast<double>(n)));
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("tls_asymmetric: empty order-statistic range");

    Objective objective = [&, lo, hi](const std::vector<double>& theta) {
        std::vector<double> res(n);
        for (std::size_t t = 0; t < n; ++t)
            res[t] = data.responses[t] - model(row_of(data, t), theta);
        std::sort(res.begin(), res.end());
        double acc = 0.0;
        for (std::size_t i = lo; i <= hi; ++i) acc += res[i - 1] * res[i - 1];
        const double mean = acc / static_cast<double>(n);
        if (!std::isfinite(mean)) throw_nonfinite(theta);
        return mean;
    };
    return run_fit(objective, std::move(init), budget);
}

namespace {

// Fixed-point / bisection driver for the skipped-mean first-order condition
// x = cond_mean((k_lo - x, k_hi - x]). `cond_mean(lo, hi)` returns the mean
// of the checked distribution restricted to (lo, hi], or NaN when the window
// carries no mass.
HuberSkippedReport solve_skipped(const LevelPair& levels, double k_lo, double k_hi,
                                 double rvar_value,
                                 const std::function<double(double, double)>& cond_mean) {
    constexpr std::size_t kMaxIter = 10000;
    HuberSkippedReport rep;
    rep.k1 = k_hi;  // upper-level quantile corner
    rep.k2 = k_lo;  // lower-level quantile corner
    rep.rvar = rvar_value;

    auto g = [&](double x) { return cond_mean(k_lo - x, k_hi - x); };
    auto h = [&](double x) { return x - g(x); };

    std::size_t iter = 0;

    // Expand a bracket around the interquantile range.
    double lo = k_lo - 1.0, hi = k_hi + 1.0;
    double h_lo = h(lo), h_hi = h(hi);
    while ((std::isnan(h_lo) || h_lo > 0.0) && iter < kMaxIter) {
        lo -= std::max(1.0, hi - lo);
        h_lo = h(lo);
        ++iter;
    }
    while ((std::isnan(h_hi) || h_hi < 0.0) && iter < kMaxIter) {
        hi += std::max(1.0, hi - lo);
        h_hi = h(hi);
        ++iter;
    }

    double mid = 0.5 * (lo + hi);
    for (; iter < kMaxIter; ++iter) {
        mid = 0.5 * (lo + hi);
        const double hm = h(mid);
        if (std::isnan(hm)) break;
        if (std::fabs(hm) <= 1e-13 || hi - lo <= 1e-13) break;
        if (hm > 0.0)
            hi = mid;
        else
            lo = mid;
    }

    // A jump of h may skip zero (finitely supported distributions): the
    // window is then locally constant, so the conditional mean itself is the
    // candidate fixed point.
    double solution = mid;
    const double direct = g(mid);
    if (std::isfinite(direct) && std::fabs(direct - g(direct)) <= std::fabs(h(mid)))
        solution = direct;

    rep.iterations = iter;
    rep.solution = solution;
    const double residual = std::fabs(h(solution));
    rep.converged = std::isfinite(residual) && residual <= 1e-9;
    if (!rep.converged && iter >= kMaxIter)
        throw std::runtime_error("huber_skipped_check: no convergence in 10000 iterations");
    rep.gap = std::fabs(rep.solution - rep.rvar);
    rep.matches = rep.gap <= 1e-6;
    (void)levels;
    return rep;
}

}  // namespace

HuberSkippedReport huber_skipped_check(const LevelPair& levels, double mu,
                                       double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("huber_skipped_check: sigma must be positive");
    const double k_lo = normal_var(mu, sigma, levels.alpha());
    const double k_hi = normal_var(mu, sigma, levels.beta());
    auto cond_mean = [mu, sigma](double lo, double hi) {
        const double a = (lo - mu) / sigma;
        const double b = (hi - mu) / sigma;
        const double mass = normal_cdf(b) - normal_cdf(a);
        if (!(mass > 1e-300)) return std::numeric_limits<double>::quiet_NaN();
        return mu + sigma * (normal_pdf(a) - normal_pdf(b)) / mass;
    };
    return solve_skipped(levels, k_lo, k_hi, normal_rvar(mu, sigma, levels), cond_mean);
}

HuberSkippedReport huber_skipped_check(const LevelPair& levels,
                                       const DiscreteDistribution& dist) {
    const double k_lo = dist.var(levels.alpha());
    const double k_hi = dist.var(levels.beta());
    auto cond_mean = [&dist](double lo, double hi) {
        const double mass = dist.interval_mass(lo, hi);
        if (!(mass > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        return dist.partial_expectation(lo, hi) / mass;
    };
    return solve_skipped(levels, k_lo, k_hi, distribution_rvar(dist, levels),
                         cond_mean);
}

}  // namespace rvar
