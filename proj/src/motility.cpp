#include "bnet/motility.hpp"

#include <cassert>

namespace bnet {

double perceived_signal(Bacterium const& b, ChemoField const& chemo, QsPuffField const& qs,
                        double t, SimParams const& params)
{
    double s = chemo_at(chemo, b.pos);
    if (params.w_q != 0.0 && !qs.empty())
        s += params.w_q * qs_at(qs, b.pos, t);
    return s;
}

double reading_noise(double qs_level, SimParams const& params)
{
    return params.sense_noise / (1.0 + params.qs_sensitization * qs_level);
}

int decide_run(double s_now, double s_prev, double u, SimParams const& params)
{
    double const p = s_now > s_prev ? params.p_hi : params.p_lo;
    return u < p ? 1 : 0;
}

void step(Bacterium& b, int chi, Vec2 noise, Vec2 fresh_heading, SimParams const& params,
          double run_scale)
{
    assert(!b.delivered);
    double const run = params.step_size * run_scale * chi;
    b.pos.x = b.pos.x + run * b.heading.x + noise.x;
    b.pos.y = b.pos.y + run * b.heading.y + noise.y;
    if (chi == 0)
        b.heading = fresh_heading;
}

bool maybe_emit(Bacterium& b, double chemo_now, double chemo_prev, double t, QsPuffField& qs,
                SimParams const& params)
{
    assert(b.cooperator);
    if (!(chemo_now > chemo_prev))
        return false;
    if (b.last_emit && t - *b.last_emit < params.emit_refractory)
        return false;
    qs.emit(b.pos, t, params.q_emit);
    b.last_emit = t;
    return true;
}

}  // namespace bnet
