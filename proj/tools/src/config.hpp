#ifndef RVAR_CLI_CONFIG_HPP
#define RVAR_CLI_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rvar/simulate.hpp"

namespace rvar::cli {

/// Parsed simulate configuration: the semantic fields of ExperimentConfig
/// plus which outputs to produce. The thread count and output directory are
/// deliberately not part of the semantic config (and hence of its hash):
/// outputs must be byte-identical across worker counts.
struct SimulateConfig {
    ExperimentConfig experiment;
    double s4_c1 = -12.0;
    double s4_c2 = 12.0;
    bool run_power = true;
    bool run_murphy = true;
    std::string out_dir;  ///< optional `out=` key; --out overrides

    /// Canonical key=value rendering of the semantic fields, one per line.
    std::string canonical() const;
    /// FNV-1a over canonical().
    std::uint64_t hash() const;
};

/// Parse a flat key=value config file. '#' starts a comment. Unknown keys
/// and invalid values raise CliError{3,...} naming the field; `seed` is
/// mandatory.
SimulateConfig read_simulate_config(const std::string& path);

std::uint64_t fnv1a64(const std::string& text);

}  // namespace rvar::cli

#endif
