#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "treeharm/symbols.hpp"
#include "treeharm/transforms.hpp"

namespace treeharm {

// Finite section of T_psi on the symmetric window [-L, L]:
// matrix(l+L, d+L) = kappa(l, l-d).
struct ZSection {
    long L = 0;
    Eigen::MatrixXcd matrix;
    std::string symbol_id;
};

// kappa(l, k) = (1/tau) sum_j weight * psi(l, s_j) q^(i s_j k). Exact when
// psi(l, .) is a trigonometric polynomial of bandwidth below N/2.
cplx z_kernel(const ZSymbol& psi, long l, long k, const TorusGrid& grid, const TreeParams& params);

ZSection finite_section(const ZSymbol& psi, long L, const TorusGrid& grid,
                        const TreeParams& params);

// T_psi f(l) = (1/tau) sum_j weight * psi(l, s_j) * Ff(s_j) * q^(i l s_j),
// evaluated on the support window of f. Agrees with the kernel-sum form
// sum_d f(d) kappa(l, l-d) up to quadrature.
ZFunction apply_zpdo(const ZSymbol& psi, const ZFunction& f, const TorusGrid& grid,
                     const TreeParams& params);

// Lower norm estimate of the finite section next to the sampled symbol
// seminorm M2 = sup |d^k psi / ds^k| over the grid, k <= 2. The ratio is
// recorded, not asserted against a universal constant.
struct CvReport {
    double norm_lb = 0.0;
    double seminorm_m2 = 0.0;
    double ratio = 0.0;
    int iterations = 0;
    bool converged = false;
};

CvReport cv_bound_check(const ZSymbol& psi, double p, long L, const TorusGrid& grid,
                        const TreeParams& params, std::uint64_t seed = 1, int max_iters = 500);

} // namespace treeharm
