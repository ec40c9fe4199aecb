#pragma once

// The five reproduction experiments, each a one-dimensional sweep run for
// two arms with a shared master seed (common random numbers across arms and
// sweep points).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bnet/engine.hpp"
#include "bnet/params.hpp"

namespace bnet {

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Arm
{
    std::string label;  ///< "coop", "noncoop" or "mixed"
    double coop_fraction = 0.0;
};

struct Scenario
{
    std::string name;
    std::string variable;  ///< "n_s", "coop_fraction" or a SimParams field
    std::vector<double> values;
    SimParams base;
    int n_s = 100;
    Arm treatment;  ///< compared against `baseline` for the gain
    Arm baseline;
    int trials = 200;
    std::uint64_t seed = 1;

    /// Throws UsageError / ConfigError.
    void validate() const;

    /// Trial template for one sweep point and arm.
    TrialConfig trial_config(double value, Arm const& arm) const;
};

std::span<std::string_view const> scenario_names();

/// Default definition of a named scenario. Throws UsageError if unknown.
Scenario make_scenario(std::string_view name);

/// One output line. Empty optionals are written as blank fields.
struct SweepRow
{
    std::string scenario;
    std::string arm;  ///< arm label, or "delta" for the gain row
    std::string variable;
    double value = 0.0;
    int n_s = 0;
    double coop_fraction = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::optional<double> mean_eta;
    std::optional<double> ci95;  ///< of mean_eta; of delta_c on a delta row
    std::optional<double> mean_eta_coop;
    std::optional<double> mean_eta_noncoop;
    std::optional<double> delta_c;

    friend bool operator==(SweepRow const&, SweepRow const&) = default;
};

/// Per sweep value: treatment row, baseline row, delta row.
std::vector<SweepRow> run_scenario(Scenario const& s, int threads = 1);

}  // namespace bnet
