#pragma once

#include <cmath>
#include <numbers>

#include "treeharm/errors.hpp"

namespace treeharm {

// Global constants of the homogeneous tree of degree q+1.
//
// tau is the period of the spectral torus, c_G the normalizing constant of
// the inversion formula. Both depend only on the branching parameter q.
struct TreeParams {
    int q = 2;
    double log_q = 0.0;
    double tau = 0.0;  // 2*pi / log q
    double c_G = 0.0;  // q * log q / (4*pi*(q+1))

    static TreeParams make(int q) {
        if (q < 2) throw invalid_parameter_error("TreeParams: q must be >= 2, got " + std::to_string(q));
        TreeParams tp;
        tp.q = q;
        tp.log_q = std::log(static_cast<double>(q));
        tp.tau = 2.0 * std::numbers::pi / tp.log_q;
        tp.c_G = static_cast<double>(q) * tp.log_q / (4.0 * std::numbers::pi * (q + 1));
        return tp;
    }
};

// Strip halfwidth delta_p = |1/p - 1/2|. Shared by p and its dual exponent.
inline double strip_halfwidth(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw invalid_parameter_error("strip_halfwidth: p must lie in (1, infinity)");
    }
    return std::abs(1.0 / p - 0.5);
}

} // namespace treeharm
