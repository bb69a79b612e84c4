#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "config.hpp"
#include "csv.hpp"
#include "rvar/rvar.hpp"

namespace rvar::cli {

namespace {

namespace fs = std::filesystem;

struct CommonScoreArgs {
    std::string input;
    double alpha = 0.1;
    double beta = 0.9;
    std::string family = "s1";
    double c1 = -12.0;
    double c2 = 12.0;
    std::string out_dir = ".";
};

LevelPair make_levels(double alpha, double beta) {
    try {
        return LevelPair(alpha, beta);
    } catch (const std::invalid_argument& e) {
        throw CliError{3, e.what()};
    }
}

ScoreFamily make_family(const std::string& name, double c1, double c2) {
    if (name == "s1") return {FamilyKind::s1_tanh, c1, c2};
    if (name == "s2") return {FamilyKind::s2_arctan, c1, c2};
    if (name == "s3") return {FamilyKind::s3_normal_cdf, c1, c2};
    if (name == "s4") return {FamilyKind::s4_huber_like, c1, c2};
    throw CliError{3, "unknown family '" + name + "' (expected s1|s2|s3|s4)"};
}

ScoreSpec make_spec(const CommonScoreArgs& a) {
    const LevelPair levels = make_levels(a.alpha, a.beta);
    try {
        ScoreSpec spec = make_table1_spec(make_family(a.family, a.c1, a.c2), levels);
        const auto report = validate_spec(spec);
        if (!report.valid) {
            std::string what = "score spec failed validation:";
            for (const auto& f : report.failures) what += " " + f + ";";
            throw CliError{3, what};
        }
        return spec;
    } catch (const std::invalid_argument& e) {
        throw CliError{3, e.what()};
    }
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path p = fs::path(dir) / name;
    std::ofstream out(p);
    if (!out) throw CliError{3, "cannot write output file: " + p.string()};
    return out;
}

int cmd_score(const CommonScoreArgs& args, std::ostream& out) {
    const ForecastData data = read_forecast_csv(args.input);
    const ScoreSpec spec = make_spec(args);

    auto scores_csv = open_output(args.out_dir, "scores.csv");
    scores_csv << "t,forecaster,score\n";
    std::vector<double> means(data.forecaster_names.size(), 0.0);
    for (std::size_t w = 0; w < data.forecaster_names.size(); ++w) {
        double acc = 0.0;
        for (std::size_t ti = 0; ti < data.times.size(); ++ti) {
            const double s =
                score(spec, data.forecasts[w][ti], data.observations[ti]);
            acc += s;
            scores_csv << data.times[ti] << ',' << data.forecaster_names[w] << ','
                       << format_double(s) << '\n';
        }
        means[w] = acc / static_cast<double>(data.times.size());
    }

    std::vector<std::size_t> order(means.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return means[a] < means[b]; });

    auto summary_csv = open_output(args.out_dir, "score_summary.csv");
    summary_csv << "forecaster,mean_score,n\n";
    out << "mean realized score (" << family_label(make_family(args.family, args.c1, args.c2))
        << ", alpha=" << format_double(args.alpha)
        << ", beta=" << format_double(args.beta) << ")\n";
    for (std::size_t rank : order) {
        summary_csv << data.forecaster_names[rank] << ',' << format_double(means[rank])
                    << ',' << data.times.size() << '\n';
        out << "  " << data.forecaster_names[rank] << ": " << format_double(means[rank])
            << '\n';
    }
    return 0;
}

int cmd_murphy(const std::string& input, double alpha, double beta,
               std::size_t grid_size, const std::string& out_dir, std::ostream& out) {
    const ForecastData data = read_forecast_csv(input);
    const LevelPair levels = make_levels(alpha, beta);

    std::vector<Triplet> pooled;
    for (const auto& f : data.forecasts) pooled.insert(pooled.end(), f.begin(), f.end());
    Sample obs(data.observations);
    std::vector<double> grid;
    try {
        grid = default_grid(obs, pooled, grid_size);
    } catch (const std::invalid_argument& e) {
        throw CliError{3, e.what()};
    }

    auto csv = open_output(out_dir, "murphy.csv");
    csv << "v,forecaster,component,mean_score\n";
    for (std::size_t w = 0; w < data.forecaster_names.size(); ++w) {
        const MurphyCurve curve = murphy_curve(levels, data.forecasts[w], obs, grid);
        for (std::size_t k = 0; k < curve.grid.size(); ++k)
            for (int comp = 0; comp < 3; ++comp)
                csv << format_double(curve.grid[k]) << ',' << data.forecaster_names[w]
                    << ',' << comp + 1 << ','
                    << format_double(curve.mean_scores[k][static_cast<std::size_t>(comp)])
                    << '\n';
    }
    out << "murphy curves for " << data.forecaster_names.size() << " forecasters on "
        << grid.size() << " thresholds\n";
    return 0;
}

int cmd_dm(const CommonScoreArgs& args, double level, const std::string& mode_name,
           std::ostream& out) {
    const ForecastData data = read_forecast_csv(args.input);
    const ScoreSpec spec = make_spec(args);
    VarianceMode mode;
    if (mode_name == "iid") mode = VarianceMode::iid;
    else if (mode_name == "hac") mode = VarianceMode::hac;
    else throw CliError{3, "unknown variance mode '" + mode_name + "'"};
    if (!(level > 0.0 && level < 1.0))
        throw CliError{3, "significance level must lie in (0,1)"};

    std::vector<NamedForecasts> sets;
    for (std::size_t w = 0; w < data.forecaster_names.size(); ++w)
        sets.push_back({data.forecaster_names[w], data.forecasts[w]});

    std::vector<PairwiseDM> results;
    try {
        results = compare_all(spec, sets, data.observations, level, mode);
    } catch (const std::invalid_argument& e) {
        throw CliError{3, e.what()};
    }

    auto csv = open_output(args.out_dir, "dm.csv");
    csv << "first,second,mean_diff,variance,statistic,p_value,reject\n";
    out << "H0: first <= second (one-sided DM, level " << format_double(level)
        << ", " << mode_name << " variance)\n";
    for (const auto& r : results) {
        csv << r.first << ',' << r.second << ',' << format_double(r.result.mean_diff)
            << ',' << format_double(r.result.variance) << ','
            << format_double(r.result.statistic) << ','
            << format_double(r.result.p_value) << ','
            << (r.result.reject ? "true" : "false") << '\n';
        out << "  " << r.first << " <= " << r.second << ": stat "
            << format_double(r.result.statistic) << ", p "
            << format_double(r.result.p_value)
            << (r.result.reject ? "  [reject]" : "") << '\n';
    }
    return 0;
}

void write_power_table(const PowerTable& table, std::ostream& csv) {
    csv << "hypothesis,family,rejection_rate\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            csv << table.rows[r] << ',' << table.columns[c] << ','
                << format_double(table.rates[r][c]) << '\n';
}

void write_murphy_study(const MurphyStudy& study, std::ostream& csv) {
    csv << "v,forecaster,component,mean_score\n";
    for (const auto& [name, curve] : study.curves)
        for (std::size_t k = 0; k < curve.grid.size(); ++k)
            for (int comp = 0; comp < 3; ++comp)
                csv << format_double(curve.grid[k]) << ',' << name << ',' << comp + 1
                    << ','
                    << format_double(curve.mean_scores[k][static_cast<std::size_t>(comp)])
                    << '\n';
}

int cmd_simulate(const std::string& config_path, std::string out_dir,
                 unsigned threads, std::ostream& out) {
    SimulateConfig cfg = read_simulate_config(config_path);
    if (out_dir.empty()) out_dir = cfg.out_dir.empty() ? "." : cfg.out_dir;
    cfg.experiment.threads = threads;

    char hash_hex[32];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                  static_cast<unsigned long long>(cfg.hash()));

    if (cfg.run_power) {
        const PowerTable table = run_power_study(cfg.experiment);
        auto csv = open_output(out_dir, "power_table.csv");
        write_power_table(table, csv);
        out << "power table written (" << cfg.experiment.reps << " replications)\n";
    }
    if (cfg.run_murphy) {
        const MurphyStudy study = run_murphy_study(cfg.experiment);
        auto csv = open_output(out_dir, "murphy.csv");
        write_murphy_study(study, csv);
        out << "murphy curves written (n=" << cfg.experiment.murphy_n << ")\n";
    }

    auto manifest = open_output(out_dir, "manifest.txt");
    manifest << "tool=rvar " << RVAR_VERSION << "\n";
    manifest << "config_hash=" << hash_hex << "\n";
    manifest << cfg.canonical();
    out << "manifest config_hash=" << hash_hex << "\n";
    return 0;
}

int cmd_estimate(const std::string& input, const std::string& method,
                 double alpha, double beta, const std::string& family, double c1,
                 double c2, double trim, const std::string& model_name,
                 std::size_t budget, const std::string& out_dir, std::ostream& out) {
    const EstimationData data = read_estimation_csv(input);
    const LevelPair levels = make_levels(alpha, beta);

    const bool with_x = !data.x.empty();
    if (model_name != "intercept" && model_name != "location")
        throw CliError{3, "unknown model '" + model_name + "'"};
    if (model_name == "location" && !with_x)
        throw CliError{3, "model 'location' needs an x column in the input"};

    Dataset ds;
    ds.responses = data.y;
    if (with_x) {
        ds.covariates.reserve(data.x.size());
        for (double x : data.x) ds.covariates.push_back({x});
    }

    std::vector<std::pair<std::string, std::string>> report;
    auto emit_fit = [&](const FitResult& fit) {
        for (std::size_t i = 0; i < fit.theta.size(); ++i)
            report.emplace_back("theta" + std::to_string(i),
                                format_double(fit.theta[i]));
        report.emplace_back("objective", format_double(fit.objective));
        report.emplace_back("converged", fit.converged ? "true" : "false");
        report.emplace_back("evaluations", std::to_string(fit.evaluations));
    };

    try {
        if (method == "joint") {
            const ScoreSpec spec =
                make_spec({input, alpha, beta, family, c1, c2, out_dir});
            Sample s(data.y);
            std::vector<double> init = {empirical_var(s, alpha),
                                        empirical_var(s, beta),
                                        empirical_rvar(s, levels)};
            JointModel model;
            if (model_name == "intercept") {
                model = [](std::span<const double>, std::span<const double> th) {
                    return Triplet{th[0], th[1], th[2]};
                };
            } else {
                init.push_back(0.0);
                model = [](std::span<const double> x, std::span<const double> th) {
                    return Triplet{th[0] + th[3] * x[0], th[1] + th[3] * x[0],
                                   th[2] + th[3] * x[0]};
                };
            }
            emit_fit(m_estimate(model, ds, spec, init, budget));
        } else if (method == "kb") {
            report.emplace_back(
                "rvar", format_double(tls_koenker_bassett(Sample(data.y), levels)));
        } else if (method == "lts" || method == "asym") {
            ScalarModel model;
            std::vector<double> init;
            Sample s(data.y);
            if (model_name == "intercept") {
                init = {empirical_var(s, 0.5)};
                model = [](std::span<const double>, std::span<const double> th) {
                    return th[0];
                };
            } else {
                init = {empirical_var(s, 0.5), 0.0};
                model = [](std::span<const double> x, std::span<const double> th) {
                    return th[0] + th[1] * x[0];
                };
            }
            if (method == "lts")
                emit_fit(lts_rousseeuw(model, ds, trim, init, budget));
            else
                emit_fit(tls_asymmetric(model, ds, levels, init, budget));
        } else if (method == "huber-check") {
            // empirical distribution of the responses, ties merged
            Sample s(data.y);
            std::vector<double> pts, ms;
            const double w = 1.0 / static_cast<double>(s.size());
            for (double ysorted : s.sorted()) {
                if (!pts.empty() && pts.back() == ysorted)
                    ms.back() += w;
                else {
                    pts.push_back(ysorted);
                    ms.push_back(w);
                }
            }
            double drift = std::accumulate(ms.begin(), ms.end(), 0.0) - 1.0;
            ms.back() -= drift;
            const auto rep = huber_skipped_check(levels, DiscreteDistribution(pts, ms));
            report.emplace_back("k1", format_double(rep.k1));
            report.emplace_back("k2", format_double(rep.k2));
            report.emplace_back("solution", format_double(rep.solution));
            report.emplace_back("rvar", format_double(rep.rvar));
            report.emplace_back("gap", format_double(rep.gap));
            report.emplace_back("matches", rep.matches ? "true" : "false");
            report.emplace_back("converged", rep.converged ? "true" : "false");
        } else {
            throw CliError{3, "unknown method '" + method +
                                  "' (expected joint|kb|lts|asym|huber-check)"};
        }
    } catch (const std::invalid_argument& e) {
        throw CliError{3, e.what()};
    } catch (const std::domain_error& e) {
        throw CliError{3, e.what()};
    } catch (const std::runtime_error& e) {
        throw CliError{4, e.what()};
    }

    out << "estimate method=" << method << " model=" << model_name << "\n";
    for (const auto& [k, v] : report) out << "  " << k << "=" << v << "\n";
    if (!out_dir.empty()) {
        auto csv = open_output(out_dir, "estimate.csv");
        csv << "key,value\n";
        for (const auto& [k, v] : report) csv << k << ',' << v << '\n';
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"scoring, Murphy diagrams, comparative backtests, and "
                 "M-estimation for quantile/interquantile-expectation triplets"};
    app.require_subcommand(1);

    CommonScoreArgs sargs;
    double dm_level = 0.05;
    std::string variance_mode = "iid";
    std::size_t grid_size = 501;
    std::string config_path;
    unsigned threads = 0;
    std::string method = "joint";
    double trim = 0.2;
    std::string model_name = "intercept";
    std::size_t budget = 60000;
    std::string est_out_dir;

    auto add_levels = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", sargs.alpha, "lower probability level");
        cmd->add_option("--beta", sargs.beta, "upper probability level");
    };
    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", sargs.family, "score family: s1|s2|s3|s4");
        cmd->add_option("--c1", sargs.c1, "lower corner of the s4 family");
        cmd->add_option("--c2", sargs.c2, "upper corner of the s4 family");
    };

    CLI::App* score_cmd = app.add_subcommand("score", "score a forecast file");
    score_cmd->add_option("--input", sargs.input, "forecast CSV")->required();
    add_levels(score_cmd);
    add_family(score_cmd);
    score_cmd->add_option("--out", sargs.out_dir, "output directory");

    CLI::App* murphy_cmd =
        app.add_subcommand("murphy", "mean elementary-score curves");
    murphy_cmd->add_option("--input", sargs.input, "forecast CSV")->required();
    add_levels(murphy_cmd);
    murphy_cmd->add_option("--grid", grid_size, "number of thresholds");
    murphy_cmd->add_option("--out", sargs.out_dir, "output directory");

    CLI::App* dm_cmd = app.add_subcommand("dm", "pairwise Diebold-Mariano tests");
    dm_cmd->add_option("--input", sargs.input, "forecast CSV")->required();
    add_levels(dm_cmd);
    add_family(dm_cmd);
    dm_cmd->add_option("--level", dm_level, "significance level");
    dm_cmd->add_option("--variance-mode", variance_mode, "iid|hac");
    dm_cmd->add_option("--out", sargs.out_dir, "output directory");

    CLI::App* sim_cmd = app.add_subcommand("simulate", "run the simulation study");
    sim_cmd->add_option("--config", config_path, "key=value config file")->required();
    std::string sim_out;
    sim_cmd->add_option("--out", sim_out, "output directory (overrides config)");
    sim_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    CLI::App* est_cmd = app.add_subcommand("estimate", "fit models to data");
    est_cmd->add_option("--input", sargs.input, "data CSV with header y or y,x")
        ->required();
    est_cmd->add_option("--method", method, "joint|kb|lts|asym|huber-check");
    add_levels(est_cmd);
    add_family(est_cmd);
    est_cmd->add_option("--trim", trim, "trim fraction for lts");
    est_cmd->add_option("--model", model_name, "intercept|location");
    est_cmd->add_option("--budget", budget, "objective evaluation budget");
    est_cmd->add_option("--out", est_out_dir, "output directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (score_cmd->parsed()) return cmd_score(sargs, out);
        if (murphy_cmd->parsed())
            return cmd_murphy(sargs.input, sargs.alpha, sargs.beta, grid_size,
                              sargs.out_dir, out);
        if (dm_cmd->parsed()) return cmd_dm(sargs, dm_level, variance_mode, out);
        if (sim_cmd->parsed()) return cmd_simulate(config_path, sim_out, threads, out);
        if (est_cmd->parsed())
            return cmd_estimate(sargs.input, method, sargs.alpha, sargs.beta,
                                sargs.family, sargs.c1, sargs.c2, trim, model_name,
                                budget, est_out_dir, out);
        err << "error: no subcommand\n";
        return 3;
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace rvar::cli
