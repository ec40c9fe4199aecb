#pragma once

// Per-step kinematics of one carrier:
//
//   p(t) = p(t-1) + step_size * v(t)/|v(t)| * chi(t) + b(t)
//
// chi = 1 is a run along the current heading, chi = 0 a tumble (no run and
// a fresh heading). b(t) is the Brownian displacement, applied every step.
// All randomness comes in through arguments.

#include <optional>

#include "bnet/fields.hpp"
#include "bnet/params.hpp"
#include "bnet/vec2.hpp"

namespace bnet {

struct Bacterium
{
    int id = 0;
    Vec2 pos;
    Vec2 heading{1.0, 0.0};  ///< unit length
    bool cooperator = false;
    double s_prev = 0.0;      ///< last reading used for the run/tumble decision
    double chemo_prev = 0.0;  ///< attractant at the last reading (emission trigger)
    std::optional<double> last_emit;
    bool delivered = false;
    std::optional<double> delivery_time;
};

/// Noise-free signal: attractant plus w_q times the QS level.
double perceived_signal(Bacterium const& b, ChemoField const& chemo, QsPuffField const& qs,
                        double t, SimParams const& params);

/// Standard deviation of one attractant reading given the local QS level.
/// Signal exposure sensitizes the receptor: sense_noise / (1 + k * level).
double reading_noise(double qs_level, SimParams const& params);

/// Run (1) or tumble (0). A strictly rising signal runs with p_hi, anything
/// else (including a tie) with p_lo. `u` is uniform on [0, 1).
int decide_run(double s_now, double s_prev, double u, SimParams const& params);

/// Applies one step. `fresh_heading` is only read when chi == 0.
/// `run_scale` shortens the run (1 = full step).
void step(Bacterium& b, int chi, Vec2 noise, Vec2 fresh_heading, SimParams const& params,
          double run_scale = 1.0);

/// A cooperator that sees the attractant rise emits a puff at its position,
/// at most once per emit_refractory. Returns true if it emitted.
/// Precondition: b.cooperator.
bool maybe_emit(Bacterium& b, double chemo_now, double chemo_prev, double t, QsPuffField& qs,
                SimParams const& params);

}  // namespace bnet
