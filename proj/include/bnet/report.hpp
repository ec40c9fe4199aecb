#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bnet/scenario.hpp"

namespace bnet::report {

inline constexpr std::string_view csv_header =
    "scenario,arm,variable,value,n_s,coop_fraction,trials,seed,mean_eta,ci95,mean_eta_coop,"
    "mean_eta_noncoop,delta_c";

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Real numbers with 6 significant digits ("%.6g").
std::string format_number(double v);

/// Header plus one line per row, LF terminated. Throws
/// std::invalid_argument for an empty row set.
std::string to_csv(std::span<SweepRow const> rows);

/// Inverse of to_csv. Throws std::invalid_argument on a bad header or line.
std::vector<SweepRow> parse_csv(std::string_view text);

/// JSON array of objects keyed like the CSV columns; blanks become null.
std::string to_json(std::span<SweepRow const> rows);

/// Throw IoError carrying the path and the OS reason on failure.
void write_csv(std::span<SweepRow const> rows, std::filesystem::path const& path);
void write_json(std::span<SweepRow const> rows, std::filesystem::path const& path);

}  // namespace bnet::report
