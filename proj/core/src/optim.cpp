#include "rvar/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rvar/parallel.hpp"
#include "rvar/rng.hpp"

namespace rvar {

SimplexResult nelder_mead(const Objective& f, std::vector<double> x0,
                          const SimplexOptions& opts) {
    const std::size_t dim = x0.size();
    if (dim == 0) throw std::invalid_argument("nelder_mead: empty start point");

    std::size_t evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return f(x);
    };

    std::vector<std::vector<double>> vert(dim + 1, x0);
    std::vector<double> fv(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        double step = opts.initial_step;
        if (vert[i + 1][i] != 0.0)
            step = std::max(step, 0.1 * std::fabs(vert[i + 1][i]));
        vert[i + 1][i] += step;
    }
    for (std::size_t i = 0; i <= dim; ++i) fv[i] = eval(vert[i]);

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);
    bool converged = false;

    while (evals < opts.max_evals) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front(), worst = order.back();
        const std::size_t second_worst = order[dim - 1];

        double spread_f = std::fabs(fv[worst] - fv[best]);
        double spread_x = 0.0;
        for (std::size_t i = 0; i <= dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                spread_x = std::max(spread_x, std::fabs(vert[i][j] - vert[best][j]));
        if (spread_f <= opts.f_tol && spread_x <= opts.x_tol) {
            converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < dim; ++j) centroid[j] += vert[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        for (std::size_t j = 0; j < dim; ++j)
            xr[j] = centroid[j] + (centroid[j] - vert[worst][j]);
        const double fr = eval(xr);

        if (fr < fv[order[0]]) {
            for (std::size_t j = 0; j < dim; ++j)
                xe[j] = centroid[j] + 2.0 * (centroid[j] - vert[worst][j]);
            const double fe = eval(xe);
            if (fe < fr) {
                vert[worst] = xe;
                fv[worst] = fe;
            } else {
                vert[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[second_worst]) {
            vert[worst] = xr;
            fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            const std::vector<double>& base = outside ? xr : vert[worst];
            for (std::size_t j = 0; j < dim; ++j)
                xc[j] = centroid[j] + 0.5 * (base[j] - centroid[j]);
            const double fc = eval(xc);
            if (fc < std::min(fr, fv[worst])) {
                vert[worst] = xc;
                fv[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 0; i <= dim; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < dim; ++j)
                        vert[i][j] = vert[best][j] + 0.5 * (vert[i][j] - vert[best][j]);
                    fv[i] = eval(vert[i]);
                    if (evals >= opts.max_evals) break;
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= dim; ++i)
        if (fv[i] < fv[best]) best = i;
    return {vert[best], fv[best], evals, converged};
}

MultiStartResult multi_start_nelder_mead(const Objective& f,
                                         const std::vector<double>& x0,
                                         const MultiStartOptions& opts) {
    if (opts.budget < 1) throw std::invalid_argument("multi_start: budget < 1");
    const std::size_t runs = 1 + opts.restarts;
    // Reserve a slice of the budget for the final polish.
    const std::size_t per_run = std::max<std::size_t>(
        (opts.budget * 3) / (4 * runs), 8 * (x0.size() + 2));

    std::vector<SimplexResult> results(runs);
    parallel_for(runs, opts.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            std::vector<double> start = x0;
            if (r > 0) {
                SplitMix64 rng(derive_stream(opts.seed, /*lane=*/17, r));
                for (double& xi : start)
                    xi += opts.perturb_scale * rng.next_normal();
            }
            SimplexOptions so;
            so.max_evals = per_run;
            so.f_tol = opts.f_tol;
            so.x_tol = opts.x_tol;
            results[r] = nelder_mead(f, std::move(start), so);
        }
    });

    std::size_t win = 0;
    std::size_t used = 0;
    for (std::size_t r = 0; r < runs; ++r) {
        used += results[r].evals;
        if (results[r].fx < results[win].fx) win = r;
    }

    MultiStartResult out;
    out.restart_values.reserve(runs);
    for (const auto& r : results) out.restart_values.push_back(r.fx);

    SimplexOptions polish;
    polish.max_evals = opts.budget > used ? opts.budget - used : 16;
    polish.f_tol = opts.f_tol * 1e-3;
    polish.x_tol = opts.x_tol * 1e-3;
    polish.initial_step = 0.05;
    SimplexResult fin = nelder_mead(f, results[win].x, polish);
    used += fin.evals;

    if (fin.fx <= results[win].fx) {
        out.x = std::move(fin.x);
        out.fx = fin.fx;
    } else {
        out.x = std::move(results[win].x);
        out.fx = results[win].fx;
    }
    out.evals = used;
    out.converged = fin.converged || results[win].converged;
    return out;
}

}  // namespace rvar
