#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bnet/fields.hpp"

namespace bnet {

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Every model constant of a single-link run. Units: ms, um, uM.
struct SimParams
{
    // Time
    double dt = 10.0;         ///< step length, ms
    double timeout = 1000.0;  ///< delivery deadline T, ms

    // Motility
    double step_size = 0.6;  ///< run displacement per step, um (60 um/s)
    double sigma_b = 0.05;   ///< Brownian std dev per axis per step, um
    double p_hi = 0.95;      ///< run probability while the reading rises
    double p_lo = 0.5;       ///< run probability otherwise

    // Sensing
    double sense_noise = 0.08;       ///< std dev of one attractant reading, uM
    double w_q = 0.0;                ///< additive weight of the QS level in a reading
    double qs_sensitization = 0.5;   ///< noise is divided by (1 + qs_sensitization * QS level)

    // Cooperation
    double q_emit = 1.0;            ///< signal released per puff
    double emit_refractory = 50.0;  ///< ms between puffs of one cell
    double emit_cost = 0.15;        ///< fraction of the run given up on an emitting step

    // Signal field
    double d_q = 100.0;          ///< um^2/s
    double tau0 = 10.0;          ///< ms
    double epsilon_prune = 1e-6;

    // Geometry and attractant
    double capture_radius = 1.0;  ///< um
    double distance_l = 20.0;     ///< source-destination separation, um
    double c0 = 10.0;             ///< uM at the destination
    double lambda = 10.0;         ///< um

    /// Throws ConfigError naming the first violated constraint.
    void validate() const;

    /// Number of steps in [dt, timeout]; requires a valid object.
    long steps() const;

    ChemoField chemo_field() const;
    QsPuffField empty_qs_field() const;
};

/// Name-addressable view of SimParams, for command-line overrides.
struct ParamField
{
    std::string_view name;
    double SimParams::*member;
    std::string_view help;
};

std::span<ParamField const> param_fields();

/// Sets the field called `name`. Throws ConfigError for unknown names.
void set_param(SimParams& params, std::string_view name, double value);

/// Parses "key=value" and applies it. Throws ConfigError on malformed input
/// or unknown keys.
void apply_override(SimParams& params, std::string_view assignment);

double get_param(SimParams const& params, std::string_view name);

}  // namespace bnet
