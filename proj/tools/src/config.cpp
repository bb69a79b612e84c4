#include "config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "csv.hpp"

namespace rvar::cli {

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string SimulateConfig::canonical() const {
    std::ostringstream os;
    os << "alpha=" << format_double(experiment.levels.alpha()) << "\n";
    os << "beta=" << format_double(experiment.levels.beta()) << "\n";
    os << "n=" << experiment.n << "\n";
    os << "reps=" << experiment.reps << "\n";
    os << "sigma=" << format_double(experiment.sigma) << "\n";
    os << "seed=" << experiment.seed << "\n";
    os << "dm_level=" << format_double(experiment.dm_level) << "\n";
    os << "murphy_n=" << experiment.murphy_n << "\n";
    os << "murphy_grid=" << experiment.murphy_grid << "\n";
    os << "murphy_sigmas=";
    for (std::size_t i = 0; i < experiment.murphy_sigmas.size(); ++i)
        os << (i ? "," : "") << format_double(experiment.murphy_sigmas[i]);
    os << "\n";
    os << "families=";
    for (std::size_t i = 0; i < experiment.families.size(); ++i)
        os << (i ? "," : "") << family_label(experiment.families[i]);
    os << "\n";
    os << "s4_c1=" << format_double(s4_c1) << "\n";
    os << "s4_c2=" << format_double(s4_c2) << "\n";
    os << "run_power=" << (run_power ? "true" : "false") << "\n";
    os << "run_murphy=" << (run_murphy ? "true" : "false") << "\n";
    return os.str();
}

std::uint64_t SimulateConfig::hash() const { return fnv1a64(canonical()); }

namespace {

[[noreturn]] void config_fail(const std::string& key, const std::string& what) {
    throw CliError{3, "config." + key + ": " + what};
}

double need_double(const std::string& key, const std::string& value) {
    double out;
    if (!parse_double(value, out)) config_fail(key, "not a number: '" + value + "'");
    return out;
}

std::uint64_t need_u64(const std::string& key, const std::string& value) {
    std::uint64_t out;
    const char* b = value.data();
    const char* e = b + value.size();
    auto [ptr, ec] = std::from_chars(b, e, out);
    if (ec != std::errc{} || ptr != e)
        config_fail(key, "not a nonnegative integer: '" + value + "'");
    return out;
}

bool need_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    config_fail(key, "expected true/false: '" + value + "'");
}

std::vector<std::string> split_commas(const std::string& value) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : value) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

FamilyKind need_family_kind(const std::string& key, const std::string& token) {
    if (token == "s1" || token == "S1") return FamilyKind::s1_tanh;
    if (token == "s2" || token == "S2") return FamilyKind::s2_arctan;
    if (token == "s3" || token == "S3") return FamilyKind::s3_normal_cdf;
    if (token == "s4" || token == "S4") return FamilyKind::s4_huber_like;
    config_fail(key, "unknown score family '" + token + "' (expected s1..s4)");
}

}  // namespace

SimulateConfig read_simulate_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{3, "cannot open config file: " + path};

    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        std::size_t start = line.find_first_not_of(' ');
        if (start == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CliError{3, path + ":" + std::to_string(line_no) +
                                  ": expected key=value"};
        std::string key = line.substr(start, eq - start);
        std::string value = line.substr(eq + 1);
        if (!kv.emplace(key, value).second)
            config_fail(key, "duplicate key");
    }

    SimulateConfig cfg;
    double alpha = cfg.experiment.levels.alpha();
    double beta = cfg.experiment.levels.beta();
    bool saw_seed = false;
    std::vector<FamilyKind> kinds = {FamilyKind::s1_tanh, FamilyKind::s2_arctan,
                                     FamilyKind::s3_normal_cdf,
                                     FamilyKind::s4_huber_like};

    for (const auto& [key, value] : kv) {
        if (key == "alpha") alpha = need_double(key, value);
        else if (key == "beta") beta = need_double(key, value);
        else if (key == "n") cfg.experiment.n = need_u64(key, value);
        else if (key == "reps") cfg.experiment.reps = need_u64(key, value);
        else if (key == "sigma") cfg.experiment.sigma = need_double(key, value);
        else if (key == "seed") { cfg.experiment.seed = need_u64(key, value); saw_seed = true; }
        else if (key == "dm_level") cfg.experiment.dm_level = need_double(key, value);
        else if (key == "murphy_n") cfg.experiment.murphy_n = need_u64(key, value);
        else if (key == "murphy_grid") cfg.experiment.murphy_grid = need_u64(key, value);
        else if (key == "murphy_sigmas") {
            cfg.experiment.murphy_sigmas.clear();
            for (const auto& tok : split_commas(value))
                cfg.experiment.murphy_sigmas.push_back(need_double(key, tok));
        } else if (key == "families") {
            kinds.clear();
            for (const auto& tok : split_commas(value))
                kinds.push_back(need_family_kind(key, tok));
        } else if (key == "s4_c1") cfg.s4_c1 = need_double(key, value);
        else if (key == "s4_c2") cfg.s4_c2 = need_double(key, value);
        else if (key == "run_power") cfg.run_power = need_bool(key, value);
        else if (key == "run_murphy") cfg.run_murphy = need_bool(key, value);
        else if (key == "out") cfg.out_dir = value;
        else config_fail(key, "unknown key");
    }
    if (!saw_seed) config_fail("seed", "missing (mandatory for reproducibility)");

    try {
        cfg.experiment.levels = LevelPair(alpha, beta);
    } catch (const std::invalid_argument& e) {
        config_fail("alpha/beta", e.what());
    }
    if (!(cfg.s4_c1 < cfg.s4_c2)) config_fail("s4_c1/s4_c2", "need s4_c1 < s4_c2");

    cfg.experiment.families.clear();
    for (FamilyKind k : kinds)
        cfg.experiment.families.push_back(ScoreFamily{k, cfg.s4_c1, cfg.s4_c2});

    try {
        cfg.experiment.validate();
    } catch (const std::invalid_argument& e) {
        throw CliError{3, std::string("config: ") + e.what()};
    }
    return cfg;
}

}  // namespace rvar::cli
