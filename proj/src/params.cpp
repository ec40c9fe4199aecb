#include "bnet/params.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace bnet {

namespace {

constexpr auto fields = std::to_array<ParamField>({
    {"dt", &SimParams::dt, "time step (ms)"},
    {"timeout", &SimParams::timeout, "delivery deadline (ms)"},
    {"step_size", &SimParams::step_size, "run length per step (um)"},
    {"sigma_b", &SimParams::sigma_b, "Brownian std dev per axis per step (um)"},
    {"p_hi", &SimParams::p_hi, "run probability when the reading rises"},
    {"p_lo", &SimParams::p_lo, "run probability otherwise"},
    {"sense_noise", &SimParams::sense_noise, "attractant reading noise (uM)"},
    {"w_q", &SimParams::w_q, "additive QS weight in a reading"},
    {"qs_sensitization", &SimParams::qs_sensitization, "QS noise-reduction gain"},
    {"q_emit", &SimParams::q_emit, "signal per puff"},
    {"emit_refractory", &SimParams::emit_refractory, "min time between puffs (ms)"},
    {"emit_cost", &SimParams::emit_cost, "run fraction lost when emitting"},
    {"d_q", &SimParams::d_q, "signal diffusion coefficient (um^2/s)"},
    {"tau0", &SimParams::tau0, "puff regularization offset (ms)"},
    {"epsilon_prune", &SimParams::epsilon_prune, "puff prune threshold"},
    {"capture_radius", &SimParams::capture_radius, "destination capture radius (um)"},
    {"distance_l", &SimParams::distance_l, "source-destination distance (um)"},
    {"c0", &SimParams::c0, "attractant at destination (uM)"},
    {"lambda", &SimParams::lambda, "attractant decay length (um)"},
});

void require(bool ok, char const* what)
{
    if (!ok)
        throw ConfigError(std::string("invalid parameters: ") + what);
}

}  // namespace

void SimParams::validate() const
{
    for (auto const& f : param_fields()) {
        if (!std::isfinite(this->*f.member))
            throw ConfigError("invalid parameters: " + std::string(f.name) + " is not finite");
    }
    require(dt > 0.0, "dt > 0");
    require(timeout >= dt, "timeout >= dt");
    double const ratio = timeout / dt;
    require(std::abs(ratio - std::round(ratio)) <= 1e-9 * ratio, "timeout / dt integral");
    require(p_lo >= 0.0 && p_lo <= p_hi && p_hi <= 1.0, "0 <= p_lo <= p_hi <= 1");
    require(step_size >= 0.0, "step_size >= 0");
    require(sigma_b >= 0.0, "sigma_b >= 0");
    require(sense_noise >= 0.0, "sense_noise >= 0");
    require(w_q >= 0.0, "w_q >= 0");
    require(qs_sensitization >= 0.0, "qs_sensitization >= 0");
    require(q_emit > 0.0, "q_emit > 0");
    require(emit_refractory >= 0.0, "emit_refractory >= 0");
    require(emit_cost >= 0.0 && emit_cost <= 1.0, "0 <= emit_cost <= 1");
    require(d_q > 0.0, "d_q > 0");
    require(tau0 > 0.0, "tau0 > 0");
    require(epsilon_prune >= 0.0, "epsilon_prune >= 0");
    require(capture_radius > 0.0, "capture_radius > 0");
    require(distance_l >= 0.0, "distance_l >= 0");
    require(c0 >= 0.0, "c0 >= 0");
    require(lambda > 0.0, "lambda > 0");
}

long SimParams::steps() const { return std::lround(timeout / dt); }

ChemoField SimParams::chemo_field() const { return {{distance_l, 0.0}, c0, lambda}; }

QsPuffField SimParams::empty_qs_field() const { return QsPuffField(d_q, tau0, epsilon_prune); }

std::span<ParamField const> param_fields()
{
    return fields;
}

void set_param(SimParams& params, std::string_view name, double value)
{
    for (auto const& f : param_fields()) {
        if (f.name == name) {
            params.*f.member = value;
            return;
        }
    }
    throw ConfigError("unknown parameter '" + std::string(name) + "'");
}

double get_param(SimParams const& params, std::string_view name)
{
    for (auto const& f : param_fields()) {
        if (f.name == name)
            return params.*f.member;
    }
    throw ConfigError("unknown parameter '" + std::string(name) + "'");
}

void apply_override(SimParams& params, std::string_view assignment)
{
    auto const eq = assignment.find('=');
    if (eq == std::string_view::npos || eq == 0)
        throw ConfigError("override '" + std::string(assignment) + "' is not key=value");
    auto const key = assignment.substr(0, eq);
    auto const text = assignment.substr(eq + 1);
    double value = 0.0;
    auto const [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
        throw ConfigError("override '" + std::string(assignment) + "': '" + std::string(text)
                          + "' is not a number");
    set_param(params, key, value);
}

}  // namespace bnet
