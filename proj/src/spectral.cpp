#include "treeharm/spectral.hpp"

#include <cmath>
#include <string>

#include "treeharm/errors.hpp"

namespace treeharm {

namespace {
constexpr double kPoleDenominatorFloor = 1e-12;
constexpr double kBranchThreshold = 1e-8;
constexpr cplx kI{0.0, 1.0};
} // namespace

TorusGrid torus_grid(int N, const TreeParams& params) {
    if (N < 4 || N % 2 != 0) {
        throw invalid_grid_error("torus_grid: N must be even and >= 4, got " + std::to_string(N));
    }
    TorusGrid g;
    g.n_nodes = N;
    g.weight = params.tau / N;
    g.nodes.resize(N);
    for (int k = 0; k < N; ++k) {
        g.nodes[k] = -params.tau / 2.0 + (k + 0.5) * g.weight;
    }
    return g;
}

double lattice_distance(cplx z, double step) {
    const double k = std::round(z.real() / step);
    return std::hypot(z.real() - k * step, z.imag());
}

cplx c_function(cplx z, const TreeParams& params) {
    const double sq = std::sqrt(static_cast<double>(params.q));
    const cplx qiz = std::exp(kI * z * params.log_q);     // q^(iz)
    const cplx qmiz = 1.0 / qiz;                          // q^(-iz)
    const cplx den = qiz - qmiz;
    if (std::abs(den) < kPoleDenominatorFloor) {
        throw pole_proximity_error("c_function: z too close to the pole set (tau/2)Z");
    }
    const cplx num = sq * qiz - qmiz / sq;                // q^(1/2+iz) - q^(-1/2-iz)
    return (sq / (params.q + 1)) * num / den;
}

double plancherel_density(double s, const TreeParams& params) {
    if (lattice_distance(cplx(s, 0.0), params.tau / 2.0) < kBranchThreshold) return 0.0;
    const cplx prod = c_function(cplx(s, 0.0), params) * c_function(cplx(-s, 0.0), params);
    const double value = 1.0 / prod.real();
    return value > 0.0 ? value : 0.0;
}

cplx spherical_function(cplx z, int dist, const TreeParams& params) {
    if (dist < 0) throw invalid_parameter_error("spherical_function: distance must be >= 0");
    const double d = static_cast<double>(dist);
    // Special branches where the generic formula cancels catastrophically.
    if (lattice_distance(z, params.tau) < kBranchThreshold) {
        const double base = ((params.q - 1.0) / (params.q + 1.0) * d + 1.0) *
                            std::pow(static_cast<double>(params.q), -d / 2.0);
        return cplx(base, 0.0);
    }
    if (lattice_distance(z - params.tau / 2.0, params.tau) < kBranchThreshold) {
        const double base = ((params.q - 1.0) / (params.q + 1.0) * d + 1.0) *
                            std::pow(static_cast<double>(params.q), -d / 2.0);
        const double sign = (dist % 2 == 0) ? 1.0 : -1.0;
        return cplx(sign * base, 0.0);
    }
    const cplx cz = c_function(z, params);
    const cplx cmz = c_function(-z, params);
    const cplx grow = std::exp((kI * z - 0.5) * (params.log_q * d));
    const cplx decay = std::exp((-kI * z - 0.5) * (params.log_q * d));
    return cz * grow + cmz * decay;
}

} // namespace treeharm
