#include "csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace rvar::cli {

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw CliError{4, "number formatting failed"};
    return std::string(buf, ptr);
}

bool parse_double(const std::string& token, double& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no,
                             const std::string& what) {
    std::ostringstream os;
    os << path << ":" << line_no << ": " << what;
    throw CliError{2, os.str()};
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{3, "cannot open input file: " + path};
    return in;
}

}  // namespace

ForecastData read_forecast_csv(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) parse_fail(path, 1, "empty file");
    ++line_no;
    {
        auto header = split_line(line);
        const std::vector<std::string> want = {"t", "y", "forecaster",
                                               "x1", "x2", "x3"};
        if (std::vector<std::string>(header.begin(), header.end()) != want)
            parse_fail(path, line_no,
                       "expected header t,y,forecaster,x1,x2,x3, got '" + line + "'");
    }

    struct Row {
        std::int64_t t;
        double y;
        std::string who;
        Triplet x;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto f = split_line(line);
        if (f.size() != 6)
            parse_fail(path, line_no, "expected 6 columns, got " +
                                          std::to_string(f.size()));
        Row r;
        {
            const char* b = f[0].data();
            const char* e = b + f[0].size();
            auto [ptr, ec] = std::from_chars(b, e, r.t);
            if (ec != std::errc{} || ptr != e)
                parse_fail(path, line_no, "column t: not an integer: '" + f[0] + "'");
        }
        if (!parse_double(f[1], r.y))
            parse_fail(path, line_no, "column y: not a number: '" + f[1] + "'");
        if (f[2].empty()) parse_fail(path, line_no, "column forecaster: empty");
        r.who = f[2];
        double x1, x2, x3;
        if (!parse_double(f[3], x1))
            parse_fail(path, line_no, "column x1: not a number: '" + f[3] + "'");
        if (!parse_double(f[4], x2))
            parse_fail(path, line_no, "column x2: not a number: '" + f[4] + "'");
        if (!parse_double(f[5], x3))
            parse_fail(path, line_no, "column x3: not a number: '" + f[5] + "'");
        if (!std::isfinite(r.y) || !std::isfinite(x1) || !std::isfinite(x2) ||
            !std::isfinite(x3))
            parse_fail(path, line_no, "non-finite value");
        r.x = Triplet{x1, x2, x3};
        rows.push_back(std::move(r));
    }
    if (rows.empty()) parse_fail(path, line_no, "no data rows");

    ForecastData data;
    std::map<std::int64_t, std::size_t> time_index;
    for (const auto& r : rows) {
        if (time_index.emplace(r.t, 0).second) data.times.push_back(r.t);
    }
    std::sort(data.times.begin(), data.times.end());
    for (std::size_t i = 0; i < data.times.size(); ++i) time_index[data.times[i]] = i;

    data.observations.assign(data.times.size(),
                             std::numeric_limits<double>::quiet_NaN());
    std::map<std::string, std::size_t> who_index;
    for (const auto& r : rows) {
        if (who_index.emplace(r.who, data.forecaster_names.size()).second)
            data.forecaster_names.push_back(r.who);
    }
    data.forecasts.assign(data.forecaster_names.size(),
                          std::vector<Triplet>(data.times.size()));
    std::vector<std::vector<bool>> seen(data.forecaster_names.size(),
                                        std::vector<bool>(data.times.size(), false));

    for (const auto& r : rows) {
        const std::size_t ti = time_index[r.t];
        const std::size_t wi = who_index[r.who];
        if (std::isnan(data.observations[ti])) {
            data.observations[ti] = r.y;
        } else if (data.observations[ti] != r.y) {
            throw CliError{3, path + ": observation y differs across rows at t=" +
                                  std::to_string(r.t)};
        }
        if (seen[wi][ti])
            throw CliError{3, path + ": duplicate row for forecaster '" + r.who +
                                  "' at t=" + std::to_string(r.t)};
        seen[wi][ti] = true;
        data.forecasts[wi][ti] = r.x;
    }
    for (std::size_t w = 0; w < seen.size(); ++w)
        for (std::size_t ti = 0; ti < data.times.size(); ++ti)
            if (!seen[w][ti])
                throw CliError{3, path + ": forecaster '" + data.forecaster_names[w] +
                                      "' is missing t=" +
                                      std::to_string(data.times[ti])};
    return data;
}

EstimationData read_estimation_csv(const std::string& path) {
    std::ifstream in = open_or_fail(path);
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) parse_fail(path, 1, "empty file");
    ++line_no;
    auto header = split_line(line);
    bool with_x = false;
    if (header.size() == 1 && header[0] == "y") {
        with_x = false;
    } else if (header.size() == 2 && header[0] == "y" && header[1] == "x") {
        with_x = true;
    } else {
        parse_fail(path, line_no, "expected header 'y' or 'y,x', got '" + line + "'");
    }

    EstimationData data;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto f = split_line(line);
        if (f.size() != (with_x ? 2u : 1u))
            parse_fail(path, line_no, "wrong column count");
        double y;
        if (!parse_double(f[0], y) || !std::isfinite(y))
            parse_fail(path, line_no, "column y: not a finite number: '" + f[0] + "'");
        data.y.push_back(y);
        if (with_x) {
            double x;
            if (!parse_double(f[1], x) || !std::isfinite(x))
                parse_fail(path, line_no,
                           "column x: not a finite number: '" + f[1] + "'");
            data.x.push_back(x);
        }
    }
    if (data.y.empty()) parse_fail(path, line_no, "no data rows");
    return data;
}

}  // namespace rvar::cli
