#include "bnet/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "bnet/fields.hpp"
#include "bnet/motility.hpp"
#include "bnet/stats.hpp"

namespace bnet {

namespace {

class CarrierStream
{
public:
    CarrierStream(std::uint64_t seed, std::uint64_t trial, int id)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                          static_cast<std::uint32_t>(id), 0x62616374u};
        engine_.seed(seq);
    }

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double normal() { return normal_(engine_); }
    Vec2 heading() { return unit_from_angle(2.0 * std::numbers::pi * uniform()); }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
};

bool captured(Vec2 pos, Vec2 destination, double radius)
{
    return norm2(pos - destination) <= radius * radius;
}

}  // namespace

int TrialConfig::cooperator_count() const
{
    return static_cast<int>(std::lround(coop_fraction * n_s));
}

void TrialConfig::validate() const
{
    params.validate();
    if (n_s < 1)
        throw ConfigError("invalid trial: n_s must be >= 1");
    if (!(coop_fraction >= 0.0 && coop_fraction <= 1.0))
        throw ConfigError("invalid trial: coop_fraction must lie in [0, 1]");
}

TrialResult run_trial(TrialConfig const& cfg)
{
    cfg.validate();
    SimParams const& p = cfg.params;
    bool const social = cfg.kernel == Kernel::social;
    ChemoField const chemo = p.chemo_field();
    Vec2 const destination = chemo.source;
    QsPuffField qs = p.empty_qs_field();
    bool const signal_matters = p.w_q != 0.0 || p.qs_sensitization != 0.0;

    auto const n = static_cast<std::size_t>(cfg.n_s);
    int const n_coop = cfg.cooperator_count();

    std::vector<Bacterium> pop(n);
    std::vector<CarrierStream> rng;
    rng.reserve(n);
    double const chemo_start = chemo_at(chemo, Vec2{});
    for (std::size_t i = 0; i < n; ++i) {
        auto& b = pop[i];
        b.id = static_cast<int>(i);
        b.cooperator = b.id < n_coop;
        rng.emplace_back(cfg.seed, cfg.trial_index, b.id);
        b.heading = rng[i].heading();
        b.chemo_prev = chemo_start;
        b.s_prev = chemo_start;  // empty field: the noise-free signal is the attractant
        if (captured(b.pos, destination, p.capture_radius)) {
            b.delivered = true;
            b.delivery_time = 0.0;
        }
    }

    std::vector<double> chemo_now(n), s_now(n);
    std::vector<char> emitted(n);
    std::size_t puffs = 0;
    long const steps = p.steps();
    for (long k = 1; k <= steps; ++k) {
        double const t = static_cast<double>(k) * p.dt;

        std::optional<QsSnapshot> snap;
        if (social && signal_matters && !qs.empty())
            snap.emplace(qs, t);

        for (std::size_t i = 0; i < n; ++i) {
            auto const& b = pop[i];
            if (b.delivered)
                continue;
            double const c = chemo_at(chemo, b.pos);
            double const level = snap ? snap->at(b.pos) : 0.0;
            chemo_now[i] = c;
            s_now[i] = c + p.w_q * level + reading_noise(level, p) * rng[i].normal();
        }

        std::fill(emitted.begin(), emitted.end(), char{0});
        if (social) {
            for (std::size_t i = 0; i < n; ++i) {
                auto& b = pop[i];
                if (b.delivered || !b.cooperator)
                    continue;
                if (maybe_emit(b, chemo_now[i], b.chemo_prev, t, qs, p)) {
                    emitted[i] = 1;
                    ++puffs;
                }
            }
        }

        for (std::size_t i = 0; i < n; ++i) {
            auto& b = pop[i];
            if (b.delivered)
                continue;
            auto& r = rng[i];
            int const chi = decide_run(s_now[i], b.s_prev, r.uniform(), p);
            double const nx = p.sigma_b * r.normal();
            double const ny = p.sigma_b * r.normal();
            Vec2 const fresh = chi == 0 ? r.heading() : b.heading;
            step(b, chi, {nx, ny}, fresh, p, emitted[i] ? 1.0 - p.emit_cost : 1.0);
            b.s_prev = s_now[i];
            b.chemo_prev = chemo_now[i];
            if (captured(b.pos, destination, p.capture_radius)) {
                b.delivered = true;
                b.delivery_time = t;
            }
        }

        if (social)
            qs.prune(t);
    }

    TrialResult res;
    res.n_s = cfg.n_s;
    res.n_coop = n_coop;
    res.puffs_emitted = puffs;
    res.final_positions.reserve(n);
    for (auto const& b : pop) {
        res.final_positions.push_back(b.pos);
        if (!b.delivered)
            continue;
        res.delivered_ids.push_back(b.id);
        res.delivery_times.push_back(*b.delivery_time);
        ++(b.cooperator ? res.n_d_coop : res.n_d_noncoop);
    }
    res.n_d = res.n_d_coop + res.n_d_noncoop;
    res.eta = static_cast<double>(res.n_d) / cfg.n_s;
    if (n_coop > 0)
        res.eta_coop = static_cast<double>(res.n_d_coop) / n_coop;
    if (n_coop < cfg.n_s)
        res.eta_noncoop = static_cast<double>(res.n_d_noncoop) / (cfg.n_s - n_coop);
    return res;
}

ArmSummary run_replicated(TrialConfig const& tmpl, int trials, int threads)
{
    if (trials < 1)
        throw ConfigError("run_replicated: trials must be >= 1");
    tmpl.validate();
    if (threads <= 0)
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, trials);

    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i = next++; i < trials; i = next++) {
            try {
                TrialConfig cfg = tmpl;
                cfg.trial_index = static_cast<std::uint64_t>(i);
                results[static_cast<std::size_t>(i)] = run_trial(cfg);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    ArmSummary s;
    s.trials = trials;
    for (auto const& r : results) {
        s.etas.push_back(r.eta);
        if (r.eta_coop)
            s.etas_coop.push_back(*r.eta_coop);
        if (r.eta_noncoop)
            s.etas_noncoop.push_back(*r.eta_noncoop);
    }
    s.mean_eta = stats::mean(s.etas);
    s.se_eta = stats::standard_error(s.etas);
    s.ci95_eta = stats::ci95_half_width(s.etas);
    if (!s.etas_coop.empty()) {
        s.mean_eta_coop = stats::mean(s.etas_coop);
        s.se_eta_coop = stats::standard_error(s.etas_coop);
        s.ci95_eta_coop = stats::ci95_half_width(s.etas_coop);
    }
    if (!s.etas_noncoop.empty()) {
        s.mean_eta_noncoop = stats::mean(s.etas_noncoop);
        s.se_eta_noncoop = stats::standard_error(s.etas_noncoop);
        s.ci95_eta_noncoop = stats::ci95_half_width(s.etas_noncoop);
    }
    return s;
}

double relative_gain(double eta_cc, double eta_nc)
{
    if (!(eta_nc > 0.0))
        throw UndefinedGainError("relative gain undefined: non-cooperative rate is 0");
    return (eta_cc - eta_nc) / eta_nc;
}

std::optional<GainEstimate> estimate_gain(ArmSummary const& coop, ArmSummary const& noncoop)
{
    if (!(noncoop.mean_eta > 0.0))
        return std::nullopt;
    GainEstimate g;
    g.value = relative_gain(coop.mean_eta, noncoop.mean_eta);
    g.ci95 = stats::z95
             * stats::relative_gain_se(coop.mean_eta, coop.se_eta, noncoop.mean_eta,
                                       noncoop.se_eta);
    return g;
}

}  // namespace bnet
