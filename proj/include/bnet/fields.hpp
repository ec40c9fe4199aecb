#pragma once

// Concentration fields sensed by the carriers: the destination's
// steady-state chemoattractant and the quorum-sensing signal built from
// discrete puffs emitted by cooperators.

#include <cstddef>
#include <span>
#include <vector>

#include "bnet/vec2.hpp"

namespace bnet {

/// Steady-state attractant around the destination:
/// c(r) = c0 * lambda / (lambda + r).
struct ChemoField
{
    Vec2 source;
    double c0 = 10.0;      ///< uM at the source
    double lambda = 10.0;  ///< decay length, um

    /// Throws std::invalid_argument if c0 < 0 or lambda <= 0.
    void validate() const;
};

double chemo_at(ChemoField const& field, Vec2 x);

/// One instantaneous release of signal.
struct QsPuff
{
    Vec2 origin;
    double t_emit = 0.0;  ///< ms
    double q = 1.0;       ///< signal units
};

/// Superposition of freely diffusing 2-D Gaussian puffs. Each puff
/// contributes q / (4 pi D tau) * exp(-r^2 / (4 D tau)), where
/// tau = t - t_emit + tau0 (converted to seconds) keeps a fresh puff finite.
class QsPuffField
{
public:
    /// d_q in um^2/s, tau0 in ms. Throws std::invalid_argument on
    /// d_q <= 0, tau0 <= 0 or epsilon_prune < 0.
    QsPuffField(double d_q, double tau0, double epsilon_prune);

    double d_q() const noexcept { return d_q_; }
    double tau0() const noexcept { return tau0_; }
    double epsilon_prune() const noexcept { return epsilon_prune_; }

    std::span<QsPuff const> puffs() const noexcept { return puffs_; }
    std::size_t size() const noexcept { return puffs_.size(); }
    bool empty() const noexcept { return puffs_.empty(); }

    /// Peak (centre) concentration of `puff` at time t (ms).
    double peak(QsPuff const& puff, double t) const;

    /// Throws std::invalid_argument unless q > 0 and t >= 0.
    void emit(Vec2 origin, double t, double q);

    /// Drops puffs whose peak at time t is below epsilon_prune. Returns the
    /// number removed. Relative order of the survivors is kept.
    std::size_t prune(double t);

private:
    double d_q_;
    double tau0_;
    double epsilon_prune_;
    std::vector<QsPuff> puffs_;
};

/// Signal at x, time t (ms). Puffs emitted after t do not contribute.
double qs_at(QsPuffField const& field, Vec2 x, double t);

/// Batch evaluation of one field at many points for a single instant. The
/// per-puff amplitude and spread are computed once per snapshot; each
/// evaluation then costs one exp per puff. Agrees with qs_at to rounding.
class QsSnapshot
{
public:
    QsSnapshot(QsPuffField const& field, double t);

    double at(Vec2 x) const;
    bool empty() const noexcept { return amp_.empty(); }

private:
    std::vector<double> ox_, oy_, amp_, inv_spread_;
};

}  // namespace bnet
