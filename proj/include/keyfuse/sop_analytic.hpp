#pragma once

#include <span>
#include <vector>

#include "keyfuse/errors.hpp"

namespace keyfuse {

/// One point of the outage analysis: per-key exposure probability p, session
/// length K messages, fusion window w (w = 1 is the non-fusing case).
struct SopQuery {
    SopQuery(double p, int message_count, int window_size);

    double p;
    int message_count;
    int window_size;
};

/// Secret outage probability of a session: 1 - (1 - p^w)^K. A message falls
/// only when all w keys of its window are leaked; the session falls when any
/// message does. Evaluated through expm1/log1p so outage probabilities down
/// to 1e-300 keep full relative accuracy.
double sop_closed_form(const SopQuery& q);

/// log10 of the outage probability, computed in the log domain so it stays
/// finite even where the linear value would underflow to zero.
double sop_log10(const SopQuery& q);

/// Inverse of the closed form in p: the largest per-key exposure probability
/// that still meets the target outage. target must lie in (0, 1).
double allowed_exposure(double target_sop, int message_count, int window_size);

struct SopCurveRow {
    double p;
    int window_size;
    double sop;
};

/// Row-major table of the closed form over a (p, w) grid.
std::vector<SopCurveRow> sop_curve(std::span<const double> p_grid, int message_count,
                                   std::span<const int> w_grid);

} // namespace keyfuse
