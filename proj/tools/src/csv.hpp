#ifndef RVAR_CLI_CSV_HPP
#define RVAR_CLI_CSV_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rvar/triplet.hpp"

namespace rvar::cli {

/// Thrown by command implementations; carries the process exit code.
/// 2 = input parse error, 3 = semantic/config error, 4 = numerical failure.
struct CliError {
    int exit_code;
    std::string message;
};

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

/// Parses a full token as double; returns false on trailing garbage.
bool parse_double(const std::string& token, double& out);

/// Long-format forecast input: one row per (time, forecaster) under the
/// header t,y,forecaster,x1,x2,x3. Each forecaster must cover every time
/// exactly once and the observation must agree across forecasters.
struct ForecastData {
    std::vector<std::int64_t> times;               ///< ascending
    std::vector<double> observations;              ///< aligned with times
    std::vector<std::string> forecaster_names;     ///< order of first appearance
    std::vector<std::vector<Triplet>> forecasts;   ///< [forecaster][time]
};

ForecastData read_forecast_csv(const std::string& path);

/// Simple column data for estimation commands: header `y` or `y,x`.
struct EstimationData {
    std::vector<double> y;
    std::vector<double> x;  ///< empty when the file has no covariate column
};

EstimationData read_estimation_csv(const std::string& path);

}  // namespace rvar::cli

#endif
