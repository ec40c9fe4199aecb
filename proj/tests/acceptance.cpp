// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Tolerances are fixed here on purpose; do not tune
// them to make a run pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bnet/codec.hpp"
#include "bnet/engine.hpp"
#include "bnet/fields.hpp"
#include "bnet/motility.hpp"
#include "bnet/report.hpp"
#include "bnet/scenario.hpp"
#include "bnet/stats.hpp"

using namespace bnet;

namespace {

// --- pinned tolerances -------------------------------------------------------
constexpr double kinematics_tol = 1e-12;
constexpr double kinematics_budget_s = 1.0;
constexpr double reduction_budget_s = 60.0;
constexpr double distance_budget_s = 300.0;
constexpr double distance_rho_max = -0.9;
constexpr double density_rho_min = 0.9;
constexpr int density_trials = 500;
constexpr int free_riding_trials = 500;
constexpr double msd_rel_tol = 0.05;
constexpr double drift_se_max = 3.0;
constexpr long brownian_steps = 100000;
constexpr int codec_round_trips = 10000;
constexpr double mass_rel_tol = 0.01;
constexpr double linearity_tol = 1e-12;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report_line(char const* name, Outcome const& o)
{
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

void run_check(char const* name, std::function<Outcome()> const& fn)
{
    try {
        report_line(name, fn());
    } catch (std::exception const& e) {
        report_line(name, {false, std::string("exception: ") + e.what()});
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(char const* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<SweepRow> rows_for(std::vector<SweepRow> const& rows, std::string const& arm)
{
    std::vector<SweepRow> out;
    for (auto const& r : rows)
        if (r.arm == arm)
            out.push_back(r);
    return out;
}

std::vector<double> etas(std::vector<SweepRow> const& rows)
{
    std::vector<double> v;
    for (auto const& r : rows)
        v.push_back(*r.mean_eta);
    return v;
}

std::vector<double> values(std::vector<SweepRow> const& rows)
{
    std::vector<double> v;
    for (auto const& r : rows)
        v.push_back(r.value);
    return v;
}

std::string join(std::vector<double> const& v)
{
    std::string s;
    for (auto const x : v)
        s += (s.empty() ? "" : " ") + report::format_number(x);
    return s;
}

// --- criteria -----------------------------------------------------------------

Outcome kinematics_oracle()
{
    auto const t0 = std::chrono::steady_clock::now();
    SimParams const p;
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0), start(-50.0, 50.0);
    std::normal_distribution<double> g(0.0, p.sigma_b);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Bacterium b;
        b.pos = {start(rng), start(rng)};
        double const th0 = 2.0 * std::numbers::pi * u(rng);
        b.heading = unit_from_angle(th0);
        int const chi = u(rng) < 0.5 ? 0 : 1;
        double const nx = g(rng), ny = g(rng);
        double const th1 = 2.0 * std::numbers::pi * u(rng);
        // brute force: velocity normalized explicitly from an unnormalized vector
        double const vx = 3.0 * std::cos(th0), vy = 3.0 * std::sin(th0);
        double const vn = std::sqrt(vx * vx + vy * vy);
        double const ex = b.pos.x + p.step_size * (vx / vn) * chi + nx;
        double const ey = b.pos.y + p.step_size * (vy / vn) * chi + ny;
        step(b, chi, {nx, ny}, unit_from_angle(th1), p);
        worst = std::max({worst, std::abs(b.pos.x - ex), std::abs(b.pos.y - ey)});
    }
    double const secs = seconds_since(t0);
    return {worst <= kinematics_tol && secs < kinematics_budget_s,
            fmt("max |err| = %.3g (tol %.0e), %.3f s", worst, kinematics_tol, secs)};
}

Outcome reduction_equivalence()
{
    auto const t0 = std::chrono::steady_clock::now();
    Scenario const s = make_scenario("distance_sweep");
    long compared = 0, mismatches = 0;
    for (double const l : s.values) {
        TrialConfig nobody = s.trial_config(l, s.baseline);
        TrialConfig plain = nobody;
        plain.kernel = Kernel::plain;
        TrialConfig neutral = s.trial_config(l, s.treatment);
        neutral.params.w_q = 0.0;
        neutral.params.qs_sensitization = 0.0;
        neutral.params.emit_cost = 0.0;
        for (int i = 0; i < s.trials; ++i) {
            nobody.trial_index = plain.trial_index = neutral.trial_index
                = static_cast<std::uint64_t>(i);
            auto const ref = run_trial(plain);
            auto const a = run_trial(nobody);
            auto const b = run_trial(neutral);
            bool const same = a == ref && b.final_positions == ref.final_positions
                              && b.delivered_ids == ref.delivered_ids
                              && b.delivery_times == ref.delivery_times;
            mismatches += same ? 0 : 1;
            ++compared;
        }
    }
    double const secs = seconds_since(t0);
    return {mismatches == 0 && secs < reduction_budget_s,
            fmt("%ld trials x 3 arms, %ld mismatches, %.1f s (budget %.0f s)", compared,
                mismatches, secs, reduction_budget_s)};
}

struct DistanceRun
{
    std::vector<SweepRow> rows;
    double seconds = 0.0;
};

Outcome determinism(DistanceRun& out)
{
    Scenario const s = make_scenario("distance_sweep");
    auto const t0 = std::chrono::steady_clock::now();
    out.rows = run_scenario(s, 1);
    out.seconds = seconds_since(t0);
    auto const parallel = run_scenario(s, 4);
    Scenario f = make_scenario("coop_fraction_sweep");
    f.trials = 50;
    auto const f1 = report::to_csv(run_scenario(f, 1));
    auto const f3 = report::to_csv(run_scenario(f, 3));
    bool const same = report::to_csv(out.rows) == report::to_csv(parallel) && f1 == f3;
    return {same, fmt("distance_sweep and coop_fraction_sweep CSVs %s across 1 vs 4/3 threads",
                      same ? "byte-identical" : "DIFFER")};
}

Outcome distance_trend(DistanceRun const& run)
{
    auto const coop = rows_for(run.rows, "coop");
    auto const nc = rows_for(run.rows, "noncoop");
    auto const ec = etas(coop), en = etas(nc), x = values(coop);
    bool decreasing = true;
    for (std::size_t i = 1; i < ec.size(); ++i)
        decreasing = decreasing && ec[i] < ec[i - 1] && en[i] < en[i - 1];
    double const rho_c = stats::spearman(x, ec);
    double const rho_n = stats::spearman(x, en);
    bool dominates = true;
    bool separated = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 20.0)
            dominates = dominates && ec[i] >= en[i];
        if (x[i] == 20.0)
            separated = ec[i] - *coop[i].ci95 > en[i] + *nc[i].ci95;
    }
    bool const pass = decreasing && rho_c <= distance_rho_max && rho_n <= distance_rho_max
                      && dominates && separated && run.seconds < distance_budget_s;
    return {pass, fmt("coop [%s] noncoop [%s]; rho %.3f/%.3f; coop>=noncoop up to 20 um: %s; "
                      "CI separated at 20 um: %s; %.0f s",
                      join(ec).c_str(), join(en).c_str(), rho_c, rho_n, dominates ? "yes" : "no",
                      separated ? "yes" : "no", run.seconds)};
}

Outcome gain_magnitude(DistanceRun const& run)
{
    for (auto const& r : run.rows) {
        if (r.arm != "delta" || r.value != 20.0)
            continue;
        if (!r.delta_c)
            return {false, "gain undefined at 20 um"};
        double const d = *r.delta_c, h = *r.ci95;
        return {d - h > 0.0 && d > 0.0 && d < 1.0,
                fmt("delta_c = %.4f +/- %.4f at l = 20 um", d, h)};
    }
    return {false, "no delta row at 20 um"};
}

Outcome density_trend()
{
    Scenario s = make_scenario("density_sweep");
    s.trials = density_trials;
    auto const rows = run_scenario(s, 1);
    auto const coop = rows_for(rows, "coop");
    auto const nc = rows_for(rows, "noncoop");
    auto const delta = rows_for(rows, "delta");
    auto const ec = etas(coop), en = etas(nc), x = values(coop);
    bool nondecreasing = true;
    for (std::size_t i = 1; i < ec.size(); ++i)
        nondecreasing = nondecreasing && ec[i] >= ec[i - 1] && en[i] >= en[i - 1];
    double const rho_c = stats::spearman(x, ec);
    double const rho_n = stats::spearman(x, en);
    bool const gains_defined = delta.front().delta_c && delta.back().delta_c;
    double const g_lo = gains_defined ? *delta.front().delta_c : 0.0;
    double const g_hi = gains_defined ? *delta.back().delta_c : 0.0;
    bool const pass = nondecreasing && rho_c >= density_rho_min && rho_n >= density_rho_min
                      && gains_defined && g_lo > g_hi;
    return {pass, fmt("coop [%s] noncoop [%s]; rho %.3f/%.3f; delta_c(5) = %.4f vs "
                      "delta_c(40) = %.4f; %d trials",
                      join(ec).c_str(), join(en).c_str(), rho_c, rho_n, g_lo, g_hi,
                      density_trials)};
}

Outcome free_riding()
{
    Scenario const s = make_scenario("coop_fraction_sweep");
    TrialConfig const cfg = s.trial_config(s.base.c0, s.treatment);
    auto const sum = run_replicated(cfg, free_riding_trials, 1);
    // paired within trial: both classes share the same field and deadline
    std::vector<double> diff(sum.etas_noncoop.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        diff[i] = sum.etas_noncoop[i] - sum.etas_coop[i];
    double const m = stats::mean(diff);
    double const se = stats::standard_error(diff);
    double const z = se > 0.0 ? m / se : 0.0;
    return {z > stats::z95_one_sided,
            fmt("coop %.4f noncoop %.4f (f = %.2f, l = %.0f um, c0 = %.0f); paired z = %.2f "
                "> %.3f",
                *sum.mean_eta_coop, *sum.mean_eta_noncoop, cfg.coop_fraction,
                cfg.params.distance_l, cfg.params.c0, z, stats::z95_one_sided)};
}

Outcome brownian()
{
    TrialConfig cfg;
    cfg.params.step_size = 0.0;
    cfg.params.distance_l = 1000.0;
    cfg.params.timeout = cfg.params.dt;  // one step per carrier
    cfg.n_s = 1000;
    cfg.coop_fraction = 0.0;
    cfg.seed = 77;
    double const sigma = cfg.params.sigma_b;
    long n = 0;
    double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::uint64_t i = 0; n < brownian_steps; ++i) {
        cfg.trial_index = i;
        for (auto const& p : run_trial(cfg).final_positions) {
            sx += p.x;
            sy += p.y;
            sxx += p.x * p.x;
            syy += p.y * p.y;
            ++n;
        }
    }
    double const nn = static_cast<double>(n);
    double const msd = (sxx + syy) / nn;
    double const target = 2.0 * sigma * sigma;
    double const se = sigma / std::sqrt(nn);
    double const rel = std::abs(msd - target) / target;
    double const rel_x = std::abs(sxx / nn - sigma * sigma) / (sigma * sigma);
    double const rel_y = std::abs(syy / nn - sigma * sigma) / (sigma * sigma);
    double const zx = std::abs(sx / nn) / se, zy = std::abs(sy / nn) / se;
    bool const pass = rel <= msd_rel_tol && rel_x <= msd_rel_tol && rel_y <= msd_rel_tol
                      && zx <= drift_se_max && zy <= drift_se_max;
    return {pass, fmt("%ld steps: MSD/step %.4g vs %.4g (rel %.4f, per axis %.4f/%.4f); "
                      "drift %.2f/%.2f SE",
                      n, msd, target, rel, rel_x, rel_y, zx, zy)};
}

Outcome degenerate_geometry()
{
    TrialConfig at_source;
    at_source.params.distance_l = 0.0;
    at_source.coop_fraction = 1.0;
    at_source.seed = 3;
    double const eta_zero_l = run_trial(at_source).eta;
    TrialConfig one_step;
    one_step.params.distance_l = 20.0;
    one_step.params.timeout = one_step.params.dt;
    one_step.coop_fraction = 1.0;
    one_step.seed = 3;
    double const eta_one_step = run_trial(one_step).eta;
    return {eta_zero_l == 1.0 && eta_one_step == 0.0,
            fmt("eta(l = 0) = %g, eta(timeout = dt, l = 20) = %g", eta_zero_l, eta_one_step)};
}

Outcome codec_check()
{
    auto const ref = codec::decode("GATTACTG").str();
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> len(0, 64);
    int failures_rt = 0;
    for (int i = 0; i < codec_round_trips; ++i) {
        std::string bits(static_cast<std::size_t>(len(rng)), '0');
        for (auto& c : bits)
            c = (rng() & 1u) ? '1' : '0';
        auto const b = codec::BitString::parse(bits);
        auto const policy = codec::BasePolicy::seeded(rng());
        if (!(codec::decode(codec::encode(b, policy)) == b))
            ++failures_rt;
    }
    return {ref == "10110011" && failures_rt == 0,
            fmt("decode(GATTACTG) = %s; %d/%d round trips failed", ref.c_str(), failures_rt,
                codec_round_trips)};
}

Outcome qs_mass()
{
    QsPuffField f(100.0, 10.0, 0.0);
    double const q = 1.0;
    f.emit({0.0, 0.0}, 0.0, q);
    double const h = 0.2;
    double sum = 0.0;
    for (double x = -30.0; x <= 30.0; x += h)
        for (double y = -30.0; y <= 30.0; y += h)
            sum += qs_at(f, {x, y}, 20.0) * h * h;
    double const rel = std::abs(sum - q) / q;

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pos(-10.0, 10.0), te(0.0, 100.0);
    QsPuffField a(100.0, 10.0, 0.0), b(100.0, 10.0, 0.0), ab(100.0, 10.0, 0.0);
    for (int k = 0; k < 50; ++k) {
        Vec2 const o{pos(rng), pos(rng)};
        double const t = te(rng);
        (k % 2 ? a : b).emit(o, t, 1.0);
        ab.emit(o, t, 1.0);
    }
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        Vec2 const x{pos(rng), pos(rng)};
        worst = std::max(worst, std::abs(qs_at(ab, x, 120.0) - qs_at(a, x, 120.0)
                                         - qs_at(b, x, 120.0)));
    }
    return {rel <= mass_rel_tol && worst <= linearity_tol,
            fmt("grid integral %.6f (rel err %.2e); max superposition error %.2e", sum, rel,
                worst)};
}

}  // namespace

int main()
{
    run_check("kinematics_oracle", kinematics_oracle);
    run_check("reduction_equivalence", reduction_equivalence);
    DistanceRun distance;
    run_check("determinism", [&] { return determinism(distance); });
    if (distance.rows.empty()) {
        report_line("distance_trend", {false, "distance sweep did not run"});
        report_line("gain_magnitude", {false, "distance sweep did not run"});
    } else {
        run_check("distance_trend", [&] { return distance_trend(distance); });
        run_check("gain_magnitude", [&] { return gain_magnitude(distance); });
    }
    run_check("density_trend", density_trend);
    run_check("free_riding", free_riding);
    run_check("brownian_statistics", brownian);
    run_check("degenerate_geometry", degenerate_geometry);
    run_check("codec", codec_check);
    run_check("qs_mass_conservation", qs_mass);
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
