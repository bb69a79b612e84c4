#ifndef RVAR_OPTIM_HPP
#define RVAR_OPTIM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rvar {

using Objective = std::function<double(const std::vector<double>&)>;

struct SimplexOptions {
    std::size_t max_evals = 20000;
    double f_tol = 1e-6;     ///< spread of simplex values
    double x_tol = 1e-6;     ///< spread of simplex vertices
    double initial_step = 0.5;
};

struct SimplexResult {
    std::vector<double> x;
    double fx = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

/// Nelder-Mead downhill simplex. The returned point is the best vertex seen,
/// so the result is never worse than the start.
SimplexResult nelder_mead(const Objective& f, std::vector<double> x0,
                          const SimplexOptions& opts = {});

struct MultiStartOptions {
    std::size_t budget = 60000;      ///< total objective evaluations
    std::size_t restarts = 8;        ///< perturbed starts beyond the first
    double perturb_scale = 1.0;
    double f_tol = 1e-6;
    double x_tol = 1e-6;
    std::uint64_t seed = 0x5eedULL;  ///< restart perturbations only
    unsigned threads = 0;
};

struct MultiStartResult {
    std::vector<double> x;
    double fx = 0.0;
    std::size_t evals = 0;
    bool converged = false;               ///< the winning restart converged
    std::vector<double> restart_values;   ///< final value of each restart
};

/// Restarted simplex search: one run from x0, `restarts` runs from
/// deterministic perturbations, then a polish run from the best point found.
/// Restarts execute concurrently; the winner is the lowest value with ties
/// broken by restart index, so the result is independent of scheduling.
MultiStartResult multi_start_nelder_mead(const Objective& f,
                                         const std::vector<double>& x0,
                                         const MultiStartOptions& opts = {});

}  // namespace rvar

#endif
