#include "keyfuse/sop_analytic.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace keyfuse {

SopQuery::SopQuery(double p_, int message_count_, int window_size_)
    : p(p_), message_count(message_count_), window_size(window_size_) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("exposure probability must lie in [0, 1], got " + std::to_string(p));
    }
    if (message_count < 1) {
        throw ValidationError("message count must be >= 1");
    }
    if (window_size < 1) {
        throw ValidationError("window size must be >= 1");
    }
}

double sop_closed_form(const SopQuery& q) {
    if (q.p <= 0.0) {
        return 0.0;
    }
    if (q.p >= 1.0) {
        return 1.0;
    }
    const double k = static_cast<double>(q.message_count);
    const double w_log_p = static_cast<double>(q.window_size) * std::log(q.p);
    const double t = std::exp(w_log_p); // p^w, relative-accurate
    double s;
    if (t < 0.5) {
        s = -std::expm1(k * std::log1p(-t));
    } else {
        // p^w close to 1: take 1 - p^w through expm1 to keep its accuracy.
        const double u = -std::expm1(w_log_p);
        s = -std::expm1(k * std::log(u));
    }
    if (s <= 0.0) {
        return 0.0; // drop the sign of -0.0
    }
    return std::min(s, 1.0);
}

double sop_log10(const SopQuery& q) {
    const double s = sop_closed_form(q);
    if (s > 0.0) {
        return std::log10(s);
    }
    if (q.p <= 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    // p^w underflowed: sop = K*p^w to better than 1e-12 in this regime.
    return std::log10(static_cast<double>(q.message_count)) +
           static_cast<double>(q.window_size) * std::log10(q.p);
}

double allowed_exposure(double target_sop, int message_count, int window_size) {
    if (!(target_sop > 0.0 && target_sop < 1.0)) {
        throw DomainError("target outage must lie in (0, 1), got " + std::to_string(target_sop));
    }
    if (message_count < 1 || window_size < 1) {
        throw ValidationError("message count and window size must be >= 1");
    }
    // p = (1 - (1 - target)^(1/K))^(1/w), each step in the log domain.
    const double per_message = -std::expm1(std::log1p(-target_sop) / message_count);
    return std::exp(std::log(per_message) / window_size);
}

std::vector<SopCurveRow> sop_curve(std::span<const double> p_grid, int message_count,
                                   std::span<const int> w_grid) {
    if (p_grid.empty() || w_grid.empty()) {
        throw ArgumentError("sop_curve needs non-empty grids");
    }
    std::vector<SopCurveRow> rows;
    rows.reserve(p_grid.size() * w_grid.size());
    for (double p : p_grid) {
        for (int w : w_grid) {
            rows.push_back({p, w, sop_closed_form(SopQuery(p, message_count, w))});
        }
    }
    return rows;
}

} // namespace keyfuse
