#include "treeharm/pdo_z.hpp"

#include <cmath>

#include "treeharm/errors.hpp"
#include "treeharm/norm_lab.hpp"
#include "treeharm/parallel.hpp"

namespace treeharm {

namespace {
constexpr cplx kI{0.0, 1.0};
} // namespace

cplx z_kernel(const ZSymbol& psi, long l, long k, const TorusGrid& grid, const TreeParams& params) {
    cplx acc(0.0);
    for (int j = 0; j < grid.n_nodes; ++j) {
        acc += grid.weight * psi.eval(l, cplx(grid.nodes[j], 0.0)) *
               std::exp(kI * (grid.nodes[j] * params.log_q * static_cast<double>(k)));
    }
    return acc / params.tau;
}

ZSection finite_section(const ZSymbol& psi, long L, const TorusGrid& grid,
                        const TreeParams& params) {
    if (L < 0) throw invalid_parameter_error("finite_section: window must be >= 0");
    ZSection section;
    section.L = L;
    section.symbol_id = psi.id();
    const long n = 2 * L + 1;
    section.matrix.resize(n, n);
    const int N = grid.n_nodes;
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const long l = static_cast<long>(row) - L;
        std::vector<cplx> folded(static_cast<std::size_t>(N));
        for (int j = 0; j < N; ++j) {
            folded[j] = grid.weight / params.tau * psi.eval(l, cplx(grid.nodes[j], 0.0));
        }
        for (long d = -L; d <= L; ++d) {
            const double phase = params.log_q * static_cast<double>(l - d);
            cplx acc(0.0);
            for (int j = 0; j < N; ++j) {
                acc += folded[j] * std::exp(kI * (grid.nodes[j] * phase));
            }
            section.matrix(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(d + L)) = acc;
        }
    });
    return section;
}

ZFunction apply_zpdo(const ZSymbol& psi, const ZFunction& f, const TorusGrid& grid,
                     const TreeParams& params) {
    if (f.l_min > f.l_max) throw invalid_input_error("apply_zpdo: empty support window");
    const int N = grid.n_nodes;
    std::vector<cplx> fhat(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) fhat[j] = z_fourier(f, cplx(grid.nodes[j], 0.0), params);

    ZFunction out;
    out.l_min = f.l_min;
    out.l_max = f.l_max;
    out.values.assign(static_cast<std::size_t>(f.size()), cplx(0.0));
    for (long l = f.l_min; l <= f.l_max; ++l) {
        cplx acc(0.0);
        for (int j = 0; j < N; ++j) {
            acc += grid.weight * psi.eval(l, cplx(grid.nodes[j], 0.0)) * fhat[j] *
                   std::exp(kI * (grid.nodes[j] * params.log_q * static_cast<double>(l)));
        }
        out.values[static_cast<std::size_t>(l - f.l_min)] = acc / params.tau;
    }
    return out;
}

CvReport cv_bound_check(const ZSymbol& psi, double p, long L, const TorusGrid& grid,
                        const TreeParams& params, std::uint64_t seed, int max_iters) {
    const ZSection section = finite_section(psi, L, grid, params);
    const NormEstimate est = pnorm_lower_bound(section.matrix, p, max_iters, seed);
    CvReport report;
    report.norm_lb = est.value;
    report.iterations = est.iterations;
    report.converged = est.converged;
    double m2 = 0.0;
    for (long l = -L; l <= L; ++l) {
        for (int j = 0; j < grid.n_nodes; ++j) {
            for (int k = 0; k <= 2; ++k) {
                m2 = std::max(m2, std::abs(psi.derivative(l, cplx(grid.nodes[j], 0.0), k)));
            }
        }
    }
    report.seminorm_m2 = m2;
    report.ratio = m2 > 0.0 ? report.norm_lb / m2 : 0.0;
    return report;
}

} // namespace treeharm
