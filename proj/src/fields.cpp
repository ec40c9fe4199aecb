#include "bnet/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bnet {

namespace {

constexpr double ms_to_s = 1e-3;

// exp(-a) underflows to zero for a beyond this; skipping those terms leaves
// the sum bit-identical.
constexpr double exp_cutoff = 746.0;

}  // namespace

void ChemoField::validate() const
{
    if (!(c0 >= 0.0))
        throw std::invalid_argument("chemo field: c0 must be >= 0");
    if (!(lambda > 0.0))
        throw std::invalid_argument("chemo field: lambda must be > 0");
}

double chemo_at(ChemoField const& field, Vec2 x)
{
    double const r = distance(x, field.source);
    return field.c0 * field.lambda / (field.lambda + r);
}

QsPuffField::QsPuffField(double d_q, double tau0, double epsilon_prune)
    : d_q_(d_q), tau0_(tau0), epsilon_prune_(epsilon_prune)
{
    if (!(d_q > 0.0))
        throw std::invalid_argument("qs field: d_q must be > 0");
    if (!(tau0 > 0.0))
        throw std::invalid_argument("qs field: tau0 must be > 0");
    if (!(epsilon_prune >= 0.0))
        throw std::invalid_argument("qs field: epsilon_prune must be >= 0");
}

double QsPuffField::peak(QsPuff const& puff, double t) const
{
    double const tau = (t - puff.t_emit + tau0_) * ms_to_s;
    return puff.q / (4.0 * std::numbers::pi * d_q_ * tau);
}

void QsPuffField::emit(Vec2 origin, double t, double q)
{
    if (!(q > 0.0))
        throw std::invalid_argument("qs emit: q must be > 0");
    if (!(t >= 0.0))
        throw std::invalid_argument("qs emit: t must be >= 0");
    puffs_.push_back({origin, t, q});
}

std::size_t QsPuffField::prune(double t)
{
    auto const before = puffs_.size();
    std::erase_if(puffs_, [&](QsPuff const& p) { return peak(p, t) < epsilon_prune_; });
    return before - puffs_.size();
}

double qs_at(QsPuffField const& field, Vec2 x, double t)
{
    double sum = 0.0;
    for (auto const& p : field.puffs()) {
        if (p.t_emit > t)
            continue;
        double const tau = (t - p.t_emit + field.tau0()) * ms_to_s;
        double const spread = 4.0 * field.d_q() * tau;
        double const r2 = norm2(x - p.origin);
        sum += p.q / (std::numbers::pi * spread) * std::exp(-r2 / spread);
    }
    return sum;
}

QsSnapshot::QsSnapshot(QsPuffField const& field, double t)
{
    auto const n = field.size();
    ox_.reserve(n);
    oy_.reserve(n);
    amp_.reserve(n);
    inv_spread_.reserve(n);
    for (auto const& p : field.puffs()) {
        if (p.t_emit > t)
            continue;
        double const tau = (t - p.t_emit + field.tau0()) * ms_to_s;
        double const spread = 4.0 * field.d_q() * tau;
        ox_.push_back(p.origin.x);
        oy_.push_back(p.origin.y);
        amp_.push_back(p.q / (std::numbers::pi * spread));
        inv_spread_.push_back(1.0 / spread);
    }
}

double QsSnapshot::at(Vec2 x) const
{
    double sum = 0.0;
    auto const n = amp_.size();
    for (std::size_t j = 0; j < n; ++j) {
        double const dx = x.x - ox_[j];
        double const dy = x.y - oy_[j];
        double const a = (dx * dx + dy * dy) * inv_spread_[j];
        if (a < exp_cutoff)
            sum += amp_[j] * std::exp(-a);
    }
    return sum;
}

}  // namespace bnet
