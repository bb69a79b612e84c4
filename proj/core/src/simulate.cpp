#include "rvar/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rvar/measures.hpp"
#include "rvar/normal.hpp"
#include "rvar/parallel.hpp"

namespace rvar {

namespace {
constexpr std::uint64_t kPowerLane = 1;
constexpr std::uint64_t kMurphyLane = 2;
}  // namespace

void ExperimentConfig::validate() const {
    if (n < 2) throw std::invalid_argument("ExperimentConfig: n must be >= 2");
    if (reps < 1) throw std::invalid_argument("ExperimentConfig: reps must be >= 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("ExperimentConfig: sigma must be > 0");
    if (!(dm_level > 0.0 && dm_level < 1.0))
        throw std::invalid_argument("ExperimentConfig: dm_level must lie in (0,1)");
    if (families.empty())
        throw std::invalid_argument("ExperimentConfig: no score families");
    if (murphy_grid < 2)
        throw std::invalid_argument("ExperimentConfig: murphy_grid must be >= 2");
    if (murphy_n < 1)
        throw std::invalid_argument("ExperimentConfig: murphy_n must be >= 1");
    for (double s : murphy_sigmas)
        if (!(s > 0.0))
            throw std::invalid_argument("ExperimentConfig: murphy sigma must be > 0");
}

std::string hypothesis_label(Hypothesis h) {
    switch (h) {
        case Hypothesis::f_le_g: return "f<=g";
        case Hypothesis::g_le_f: return "g<=f";
        case Hypothesis::f_le_h: return "f<=h";
        case Hypothesis::h_le_f: return "h<=f";
        case Hypothesis::g_le_h: return "g<=h";
        case Hypothesis::h_le_g: return "h<=g";
    }
    return "?";
}

std::pair<std::vector<double>, std::vector<double>> dgp_sample(std::size_t n,
                                                               SplitMix64& rng) {
    std::vector<double> mu(n), y(n);
    for (std::size_t t = 0; t < n; ++t) {
        mu[t] = rng.next_normal();
        y[t] = mu[t] + rng.next_normal();
    }
    return {std::move(mu), std::move(y)};
}

Triplet forecaster_f(double mu_t, const LevelPair& levels) {
    const double qa = normal_quantile(levels.alpha());
    const double qb = normal_quantile(levels.beta());
    return {mu_t + qa, mu_t + qb,
            mu_t - (normal_pdf(qb) - normal_pdf(qa)) / levels.width()};
}

Triplet forecaster_g(const Triplet& f_t, double eps_t) { return f_t + eps_t; }

Triplet forecaster_h(const LevelPair& levels) {
    const double s = std::sqrt(2.0);
    const double qa = normal_quantile(levels.alpha());
    const double qb = normal_quantile(levels.beta());
    return {s * qa, s * qb,
            -(s / levels.width()) * (normal_pdf(qb) - normal_pdf(qa))};
}

PowerTable run_power_study(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t n_fam = cfg.families.size();

    std::vector<ScoreSpec> specs;
    specs.reserve(n_fam);
    for (const auto& fam : cfg.families)
        specs.push_back(make_table1_spec(fam, cfg.levels));
    const Triplet h = forecaster_h(cfg.levels);

    // Rejection counters per (hypothesis, family), one block per worker
    // chunk; integer reduction keeps the table exact for any thread count.
    std::vector<std::vector<long>> counts(kHypothesisCount,
                                          std::vector<long>(n_fam, 0));
    std::vector<std::vector<std::vector<long>>> partial(
        parallel_chunk_count(cfg.reps, cfg.threads),
        std::vector<std::vector<long>>(kHypothesisCount,
                                       std::vector<long>(n_fam, 0)));

    parallel_for_chunks(cfg.reps, cfg.threads, [&](std::size_t chunk_index,
                                                   std::size_t begin,
                                                   std::size_t end) {
        auto& local = partial[chunk_index];
        std::vector<double> eps(cfg.n);
        std::vector<Triplet> f(cfg.n), g(cfg.n);
        std::vector<double> sf(cfg.n), sg(cfg.n), sh(cfg.n), d(cfg.n);
        for (std::size_t rep = begin; rep < end; ++rep) {
            SplitMix64 rng(derive_stream(cfg.seed, kPowerLane, rep));
            auto [mu, y] = dgp_sample(cfg.n, rng);
            for (std::size_t t = 0; t < cfg.n; ++t) eps[t] = cfg.sigma * rng.next_normal();
            for (std::size_t t = 0; t < cfg.n; ++t) {
                f[t] = forecaster_f(mu[t], cfg.levels);
                g[t] = forecaster_g(f[t], eps[t]);
            }
            for (std::size_t k = 0; k < n_fam; ++k) {
                const ScoreSpec& spec = specs[k];
                for (std::size_t t = 0; t < cfg.n; ++t) {
                    sf[t] = score(spec, f[t], y[t]);
                    sg[t] = score(spec, g[t], y[t]);
                    sh[t] = score(spec, h, y[t]);
                }
                auto test = [&](const std::vector<double>& a,
                                const std::vector<double>& b, Hypothesis hyp) {
                    for (std::size_t t = 0; t < cfg.n; ++t) d[t] = a[t] - b[t];
                    if (dm_test(d, cfg.dm_level, VarianceMode::iid).reject)
                        ++local[static_cast<std::size_t>(hyp)][k];
                };
                test(sf, sg, Hypothesis::f_le_g);
                test(sg, sf, Hypothesis::g_le_f);
                test(sf, sh, Hypothesis::f_le_h);
                test(sh, sf, Hypothesis::h_le_f);
                test(sg, sh, Hypothesis::g_le_h);
                test(sh, sg, Hypothesis::h_le_g);
            }
        }
    });
    for (const auto& local : partial)
        for (std::size_t r = 0; r < kHypothesisCount; ++r)
            for (std::size_t c = 0; c < n_fam; ++c) counts[r][c] += local[r][c];

    PowerTable table;
    for (std::size_t r = 0; r < kHypothesisCount; ++r)
        table.rows.push_back(hypothesis_label(static_cast<Hypothesis>(r)));
    for (const auto& fam : cfg.families) table.columns.push_back(family_label(fam));
    table.rates.assign(kHypothesisCount, std::vector<double>(n_fam, 0.0));
    for (std::size_t r = 0; r < kHypothesisCount; ++r)
        for (std::size_t c = 0; c < n_fam; ++c)
            table.rates[r][c] =
                static_cast<double>(counts[r][c]) / static_cast<double>(cfg.reps);
    return table;
}

MurphyStudy run_murphy_study(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.murphy_n;

    SplitMix64 rng(derive_stream(cfg.seed, kMurphyLane, 0));
    auto [mu, y] = dgp_sample(n, rng);
    std::vector<double> eps(n);
    for (std::size_t t = 0; t < n; ++t) eps[t] = rng.next_normal();

    std::vector<Triplet> f(n);
    for (std::size_t t = 0; t < n; ++t) f[t] = forecaster_f(mu[t], cfg.levels);
    const Triplet h = forecaster_h(cfg.levels);
    std::vector<Triplet> h_series(n, h);

    // The same unit noise scaled per sigma keeps the runs coupled.
    std::vector<std::vector<Triplet>> g_series;
    g_series.reserve(cfg.murphy_sigmas.size());
    for (double s : cfg.murphy_sigmas) {
        std::vector<Triplet> g(n);
        for (std::size_t t = 0; t < n; ++t) g[t] = forecaster_g(f[t], s * eps[t]);
        g_series.push_back(std::move(g));
    }

    std::vector<Triplet> pooled = f;
    for (const auto& g : g_series) pooled.insert(pooled.end(), g.begin(), g.end());
    pooled.push_back(h);

    Sample obs(y);
    MurphyStudy study;
    study.grid = default_grid(obs, pooled, cfg.murphy_grid);

    study.curves.emplace_back(
        "f", murphy_curve(cfg.levels, f, obs, study.grid, cfg.threads));
    for (std::size_t i = 0; i < cfg.murphy_sigmas.size(); ++i) {
        char label[32];
        std::snprintf(label, sizeof(label), "g_%g", cfg.murphy_sigmas[i]);
        study.curves.emplace_back(
            label, murphy_curve(cfg.levels, g_series[i], obs, study.grid, cfg.threads));
    }
    study.curves.emplace_back(
        "h", murphy_curve(cfg.levels, h_series, obs, study.grid, cfg.threads));
    return study;
}

}  // namespace rvar
