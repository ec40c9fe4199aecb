#include "bnet/scenario.hpp"

#include <array>
#include <cmath>

namespace bnet {

namespace {

constexpr std::array<std::string_view, 5> names{
    "distance_sweep", "population_sweep", "coop_fraction_sweep", "density_sweep", "gain_vs_density",
};

Arm const coop_arm{"coop", 1.0};
Arm const noncoop_arm{"noncoop", 0.0};
Arm const mixed_arm{"mixed", 0.5};

SweepRow arm_row(Scenario const& s, double value, TrialConfig const& cfg, Arm const& arm,
                 ArmSummary const& sum)
{
    SweepRow r;
    r.scenario = s.name;
    r.arm = arm.label;
    r.variable = s.variable;
    r.value = value;
    r.n_s = cfg.n_s;
    r.coop_fraction = cfg.coop_fraction;
    r.trials = s.trials;
    r.seed = s.seed;
    r.mean_eta = sum.mean_eta;
    r.ci95 = sum.ci95_eta;
    r.mean_eta_coop = sum.mean_eta_coop;
    r.mean_eta_noncoop = sum.mean_eta_noncoop;
    return r;
}

}  // namespace

void Scenario::validate() const
{
    if (values.empty())
        throw UsageError("scenario " + name + ": no sweep values");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1]))
            throw UsageError("scenario " + name + ": sweep values must be strictly increasing");
    }
    if (trials < 1)
        throw UsageError("scenario " + name + ": trials must be >= 1");
    for (double const v : values) {
        trial_config(v, treatment).validate();
        trial_config(v, baseline).validate();
    }
}

TrialConfig Scenario::trial_config(double value, Arm const& arm) const
{
    TrialConfig cfg;
    cfg.params = base;
    cfg.n_s = n_s;
    cfg.coop_fraction = arm.coop_fraction;
    cfg.seed = seed;
    if (variable == "n_s") {
        if (value != std::floor(value) || value < 1.0 || value > 1e9)
            throw ConfigError("n_s sweep value must be a positive integer");
        cfg.n_s = static_cast<int>(value);
    } else if (variable == "coop_fraction") {
        if (arm.coop_fraction > 0.0)
            cfg.coop_fraction = value;
    } else {
        set_param(cfg.params, variable, value);
    }
    return cfg;
}

std::span<std::string_view const> scenario_names() { return names; }

Scenario make_scenario(std::string_view name)
{
    Scenario s;
    s.name = std::string(name);
    s.treatment = coop_arm;
    s.baseline = noncoop_arm;
    s.n_s = 100;
    s.base.timeout = 1000.0;
    if (name == "distance_sweep") {
        s.variable = "distance_l";
        s.values = {5, 10, 15, 20, 25, 30};
        s.base.c0 = 10.0;
        s.trials = 200;
    } else if (name == "population_sweep") {
        s.variable = "n_s";
        s.values = {50, 100, 200, 300, 400, 500};
        s.base.distance_l = 20.0;
        s.trials = 200;
    } else if (name == "coop_fraction_sweep") {
        s.variable = "c0";
        s.values = {10, 20};
        s.base.distance_l = 20.0;
        s.treatment = mixed_arm;
        s.trials = 500;
    } else if (name == "density_sweep") {
        s.variable = "c0";
        s.values = {5, 10, 20, 40};
        s.base.distance_l = 20.0;
        s.trials = 200;
    } else if (name == "gain_vs_density") {
        s.variable = "c0";
        s.values = {5, 10, 15, 20, 30, 40};
        s.base.distance_l = 20.0;
        s.trials = 200;
    } else {
        throw UsageError("unknown scenario '" + std::string(name) + "'");
    }
    return s;
}

std::vector<SweepRow> run_scenario(Scenario const& s, int threads)
{
    s.validate();
    std::vector<SweepRow> rows;
    rows.reserve(3 * s.values.size());
    for (double const value : s.values) {
        auto const treat_cfg = s.trial_config(value, s.treatment);
        auto const base_cfg = s.trial_config(value, s.baseline);
        auto const treat = run_replicated(treat_cfg, s.trials, threads);
        auto const base = run_replicated(base_cfg, s.trials, threads);
        rows.push_back(arm_row(s, value, treat_cfg, s.treatment, treat));
        rows.push_back(arm_row(s, value, base_cfg, s.baseline, base));

        SweepRow d;
        d.scenario = s.name;
        d.arm = "delta";
        d.variable = s.variable;
        d.value = value;
        d.n_s = treat_cfg.n_s;
        d.coop_fraction = treat_cfg.coop_fraction;
        d.trials = s.trials;
        d.seed = s.seed;
        if (auto const g = estimate_gain(treat, base)) {
            d.delta_c = g->value;
            d.ci95 = g->ci95;
        }
        rows.push_back(d);
    }
    return rows;
}

}  // namespace bnet
