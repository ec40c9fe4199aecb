#include "bnet/report.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>

#include <json.hpp>

namespace bnet::report {

namespace {

std::string opt_number(std::optional<double> const& v) { return v ? format_number(*v) : ""; }

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto const pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

template <class T>
T parse_value(std::string_view text, std::string_view column)
{
    T v{};
    auto const [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw std::invalid_argument("csv: bad " + std::string(column) + " '" + std::string(text) + "'");
    return v;
}

std::optional<double> parse_opt(std::string_view text, std::string_view column)
{
    if (text.empty())
        return std::nullopt;
    return parse_value<double>(text, column);
}

void write_text(std::string const& text, std::filesystem::path const& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
    out << text;
    out.flush();
    if (!out)
        throw IoError("cannot write " + path.string() + ": " + std::strerror(errno));
}

nlohmann::ordered_json opt_json(std::optional<double> const& v)
{
    if (!v)
        return nullptr;
    // Same rounding as the CSV so both mirrors carry identical values.
    return std::stod(format_number(*v));
}

}  // namespace

std::string format_number(double v)
{
    char buf[32];
    int const n = std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

std::string to_csv(std::span<SweepRow const> rows)
{
    if (rows.empty())
        throw std::invalid_argument("refusing to write an empty result table");
    std::string out(csv_header);
    out += '\n';
    for (auto const& r : rows) {
        out += r.scenario + ',' + r.arm + ',' + r.variable + ',' + format_number(r.value) + ','
               + std::to_string(r.n_s) + ',' + format_number(r.coop_fraction) + ','
               + std::to_string(r.trials) + ',' + std::to_string(r.seed) + ','
               + opt_number(r.mean_eta) + ',' + opt_number(r.ci95) + ','
               + opt_number(r.mean_eta_coop) + ',' + opt_number(r.mean_eta_noncoop) + ','
               + opt_number(r.delta_c) + '\n';
    }
    return out;
}

std::vector<SweepRow> parse_csv(std::string_view text)
{
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty() || lines.front() != csv_header)
        throw std::invalid_argument("csv: missing or unexpected header");
    std::vector<SweepRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto const f = split(lines[i], ',');
        if (f.size() != 13)
            throw std::invalid_argument("csv: line " + std::to_string(i + 1) + " has "
                                        + std::to_string(f.size()) + " fields");
        SweepRow r;
        r.scenario = std::string(f[0]);
        r.arm = std::string(f[1]);
        r.variable = std::string(f[2]);
        r.value = parse_value<double>(f[3], "value");
        r.n_s = parse_value<int>(f[4], "n_s");
        r.coop_fraction = parse_value<double>(f[5], "coop_fraction");
        r.trials = parse_value<int>(f[6], "trials");
        r.seed = parse_value<std::uint64_t>(f[7], "seed");
        r.mean_eta = parse_opt(f[8], "mean_eta");
        r.ci95 = parse_opt(f[9], "ci95");
        r.mean_eta_coop = parse_opt(f[10], "mean_eta_coop");
        r.mean_eta_noncoop = parse_opt(f[11], "mean_eta_noncoop");
        r.delta_c = parse_opt(f[12], "delta_c");
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string to_json(std::span<SweepRow const> rows)
{
    if (rows.empty())
        throw std::invalid_argument("refusing to write an empty result table");
    auto arr = nlohmann::ordered_json::array();
    for (auto const& r : rows) {
        arr.push_back({
            {"scenario", r.scenario},
            {"arm", r.arm},
            {"variable", r.variable},
            {"value", std::stod(format_number(r.value))},
            {"n_s", r.n_s},
            {"coop_fraction", std::stod(format_number(r.coop_fraction))},
            {"trials", r.trials},
            {"seed", r.seed},
            {"mean_eta", opt_json(r.mean_eta)},
            {"ci95", opt_json(r.ci95)},
            {"mean_eta_coop", opt_json(r.mean_eta_coop)},
            {"mean_eta_noncoop", opt_json(r.mean_eta_noncoop)},
            {"delta_c", opt_json(r.delta_c)},
        });
    }
    return arr.dump(2) + '\n';
}

void write_csv(std::span<SweepRow const> rows, std::filesystem::path const& path)
{
    write_text(to_csv(rows), path);
}

void write_json(std::span<SweepRow const> rows, std::filesystem::path const& path)
{
    write_text(to_json(rows), path);
}

}  // namespace bnet::report
