#include "treeharm/transforms.hpp"

#include <cmath>
#include <string>

#include "treeharm/errors.hpp"
#include "treeharm/parallel.hpp"

namespace treeharm {

namespace {
constexpr cplx kI{0.0, 1.0};

// Heights are bucketed before the spectral sum: for fixed omega_j the value
// q^((1/2+is)h) depends on x only through h in [-R, R], which collapses the
// vertex sum from |ball| terms to 2R+1 terms per node.
std::vector<int> height_row(const std::vector<Vertex>& support, const BoundaryCylinder& omega) {
    std::vector<int> h(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) h[i] = height(support[i], omega);
    return h;
}
} // namespace

FiniteFunction zero_function(int R, const TreeParams& params) {
    FiniteFunction f;
    f.support_radius = R;
    f.support = ball(R, params);
    f.values.assign(f.support.size(), cplx(0.0));
    return f;
}

HelgasonTable helgason_transform(const FiniteFunction& f, const TorusGrid& grid, int D,
                                 const TreeParams& params) {
    if (D < f.support_radius) {
        throw insufficient_depth_error("helgason_transform: depth " + std::to_string(D) +
                                       " < support radius " + std::to_string(f.support_radius));
    }
    if (f.support_radius > 31) {
        throw invalid_parameter_error("helgason_transform: support radius beyond desk scale (max 31)");
    }
    HelgasonTable table;
    table.grid = grid;
    table.cylinders = boundary_cylinders(D, params);
    const std::size_t J = table.cylinders.size();
    const int N = grid.n_nodes;
    const int R = f.support_radius;
    table.entries.assign(static_cast<std::size_t>(N) * J, cplx(0.0));

    // Per-cylinder height buckets of f: bucket[j][h+R] = sum of f over the
    // height-h slice. Ball order fixes the accumulation order.
    std::vector<std::vector<cplx>> bucket(J, std::vector<cplx>(2 * R + 1, cplx(0.0)));
    parallel_for(J, [&](std::size_t j) {
        const std::vector<int> h = height_row(f.support, table.cylinders[j]);
        for (std::size_t i = 0; i < f.support.size(); ++i) {
            bucket[j][static_cast<std::size_t>(h[i] + R)] += f.values[i];
        }
    });

    parallel_for(static_cast<std::size_t>(N), [&](std::size_t k) {
        const cplx expo = (0.5 + kI * grid.nodes[k]) * params.log_q;
        cplx pw[64];
        for (int h = -R; h <= R; ++h) pw[h + R] = std::exp(expo * static_cast<double>(h));
        for (std::size_t j = 0; j < J; ++j) {
            cplx acc(0.0);
            for (int h = 0; h <= 2 * R; ++h) acc += bucket[j][h] * pw[h];
            table.entries[k * J + j] = acc;
        }
    });
    return table;
}

cplx inverse_helgason(const HelgasonTable& table, const Vertex& x, const TreeParams& params) {
    const int D = table.cylinders.empty() ? 0 : table.cylinders.front().depth();
    if (D < x.depth()) {
        throw insufficient_depth_error("inverse_helgason: cylinder depth " + std::to_string(D) +
                                       " < vertex depth " + std::to_string(x.depth()));
    }
    const std::size_t J = table.cylinders.size();
    const int N = table.grid.n_nodes;
    const int R = x.depth();
    if (R > 31) throw invalid_parameter_error("inverse_helgason: vertex depth beyond desk scale (max 31)");
    std::vector<int> h(J);
    for (std::size_t j = 0; j < J; ++j) h[j] = height(x, table.cylinders[j]);

    cplx total(0.0);
    for (int k = 0; k < N; ++k) {
        // Bucket nu_j * f~(s_k, omega_j) by the height of x, then close the
        // boundary integral with 2R+1 plane-wave factors.
        cplx bucket[64] = {};
        for (std::size_t j = 0; j < J; ++j) {
            bucket[h[j] + R] += table.cylinders[j].nu_mass * table.entries[static_cast<std::size_t>(k) * J + j];
        }
        const cplx expo = (0.5 - kI * table.grid.nodes[k]) * params.log_q;
        cplx inner(0.0);
        for (int hh = -R; hh <= R; ++hh) {
            inner += bucket[hh + R] * std::exp(expo * static_cast<double>(hh));
        }
        total += table.grid.weight * inner * plancherel_density(table.grid.nodes[k], params);
    }
    return params.c_G * total;
}

double sphere_count(int d, const TreeParams& params) {
    if (d < 0) throw invalid_parameter_error("sphere_count: distance must be >= 0");
    if (d == 0) return 1.0;
    return (params.q + 1) * std::pow(static_cast<double>(params.q), d - 1);
}

cplx spherical_transform(const std::vector<cplx>& radial_values, cplx z, const TreeParams& params) {
    cplx acc(0.0);
    for (std::size_t d = 0; d < radial_values.size(); ++d) {
        acc += radial_values[d] * sphere_count(static_cast<int>(d), params) *
               spherical_function(z, static_cast<int>(d), params);
    }
    return acc;
}

cplx z_fourier(const ZFunction& f, cplx s, const TreeParams& params) {
    cplx acc(0.0);
    for (long l = f.l_min; l <= f.l_max; ++l) {
        acc += f.at(l) * std::exp(-kI * s * (params.log_q * static_cast<double>(l)));
    }
    return acc;
}

cplx z_inverse(const std::function<cplx(double)>& F, long l, const TorusGrid& grid,
               const TreeParams& params) {
    cplx acc(0.0);
    for (int k = 0; k < grid.n_nodes; ++k) {
        acc += grid.weight * F(grid.nodes[k]) *
               std::exp(kI * (params.log_q * static_cast<double>(l) * grid.nodes[k]));
    }
    return acc / params.tau;
}

} // namespace treeharm
