#pragma once

// Trial runner. A trial releases n_s carriers at the source (origin) and
// steps them until the timeout; a carrier that comes within capture_radius
// of the destination (distance_l, 0) is delivered and frozen.
//
// Randomness: every carrier owns a private stream derived from
// (seed, trial_index, id). Per step it draws, in order: the reading noise,
// the decision uniform, two Brownian normals and, only when tumbling, a
// fresh heading angle. Trials are therefore reproducible bit for bit and
// independent of how trials are scheduled across threads.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bnet/params.hpp"
#include "bnet/vec2.hpp"

namespace bnet {

enum class Kernel
{
    social,  ///< full model: cooperators emit, everyone senses the signal field
    plain,   ///< never builds a signal field; cooperator flags are inert
};

struct TrialConfig
{
    SimParams params;
    int n_s = 100;
    double coop_fraction = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t trial_index = 0;
    Kernel kernel = Kernel::social;

    /// round(coop_fraction * n_s); ids [0, count) are the cooperators.
    int cooperator_count() const;

    /// Throws ConfigError.
    void validate() const;
};

struct TrialResult
{
    int n_s = 0;
    int n_coop = 0;
    int n_d = 0;
    int n_d_coop = 0;
    int n_d_noncoop = 0;
    double eta = 0.0;
    std::optional<double> eta_coop;     ///< empty when there are no cooperators
    std::optional<double> eta_noncoop;  ///< empty when everyone cooperates
    std::vector<int> delivered_ids;       ///< ascending
    std::vector<double> delivery_times;  ///< ms, parallel to delivered_ids
    std::vector<Vec2> final_positions;   ///< by carrier id
    std::size_t puffs_emitted = 0;

    friend bool operator==(TrialResult const&, TrialResult const&) = default;
};

TrialResult run_trial(TrialConfig const& cfg);

/// Monte-Carlo summary of one scenario arm.
struct ArmSummary
{
    int trials = 0;
    double mean_eta = 0.0;
    double se_eta = 0.0;
    double ci95_eta = 0.0;
    std::optional<double> mean_eta_coop, se_eta_coop, ci95_eta_coop;
    std::optional<double> mean_eta_noncoop, se_eta_noncoop, ci95_eta_noncoop;
    std::vector<double> etas;           ///< per trial, by trial_index
    std::vector<double> etas_coop;      ///< empty when the class is empty
    std::vector<double> etas_noncoop;

    friend bool operator==(ArmSummary const&, ArmSummary const&) = default;
};

/// Runs trial_index = 0 .. trials-1 of `tmpl` (its trial_index is ignored)
/// on up to `threads` workers and reduces in trial order. threads <= 0
/// means one worker per hardware thread.
ArmSummary run_replicated(TrialConfig const& tmpl, int trials, int threads = 1);

class UndefinedGainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// (eta_cc - eta_nc) / eta_nc. Throws UndefinedGainError unless eta_nc > 0.
double relative_gain(double eta_cc, double eta_nc);

struct GainEstimate
{
    double value = 0.0;
    double ci95 = 0.0;  ///< delta-method half-width
};

/// Relative gain of `coop` over `noncoop`, or nothing if the baseline is 0.
std::optional<GainEstimate> estimate_gain(ArmSummary const& coop, ArmSummary const& noncoop);

}  // namespace bnet
