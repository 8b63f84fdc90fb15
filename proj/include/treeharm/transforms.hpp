#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "treeharm/spectral.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

// Complex function supported on the ball of radius R, with values aligned
// to the lexicographic ball enumeration.
struct FiniteFunction {
    int support_radius = 0;
    std::vector<Vertex> support;  // = ball(support_radius)
    std::vector<cplx> values;     // same length and order as support
};

FiniteFunction zero_function(int R, const TreeParams& params);

// Table of Helgason-Fourier transform values f~(s_k, omega_j) over a torus
// grid and the depth-D cylinder family. Row index k runs over grid nodes,
// column index j over cylinders.
struct HelgasonTable {
    TorusGrid grid;
    std::vector<BoundaryCylinder> cylinders;
    std::vector<cplx> entries;  // row-major, n_nodes x cylinders.size()

    cplx at(int k, std::size_t j) const { return entries[static_cast<std::size_t>(k) * cylinders.size() + j]; }
};

// f~(s, omega) = sum_x f(x) q^((1/2+is) h_omega(x)). Exact finite sum; the
// cylinder depth D must cover the support so all heights are attained.
HelgasonTable helgason_transform(const FiniteFunction& f, const TorusGrid& grid, int D,
                                 const TreeParams& params);

// Inversion integral c_G sum_k w sum_j nu_j q^((1/2-is_k) h_j(x)) f~(s_k,omega_j) |c(s_k)|^-2.
cplx inverse_helgason(const HelgasonTable& table, const Vertex& x, const TreeParams& params);

// Number of vertices at distance d from the root: 1 for d=0, (q+1)q^(d-1) else.
double sphere_count(int d, const TreeParams& params);

// Spherical transform of a radial function given by its values per distance:
// f^(z) = sum_d f(d) * sphere_count(d) * phi_z(d). Even and tau-periodic in z.
cplx spherical_transform(const std::vector<cplx>& radial_values, cplx z, const TreeParams& params);

// Finitely supported function on the lattice Z, on the window [l_min, l_max].
struct ZFunction {
    long l_min = 0;
    long l_max = -1;
    std::vector<cplx> values;  // values[i] = f(l_min + i)

    long size() const { return l_max - l_min + 1; }
    cplx at(long l) const {
        return (l < l_min || l > l_max) ? cplx(0.0) : values[static_cast<std::size_t>(l - l_min)];
    }
};

// Forward transform on Z: Ff(s) = sum_d f(d) q^(-ids), entire in s.
cplx z_fourier(const ZFunction& f, cplx s, const TreeParams& params);

// Inverse by torus quadrature: (1/tau) sum_k w F(s_k) q^(i l s_k). Exact when
// F is a trigonometric polynomial of bandwidth below N/2.
cplx z_inverse(const std::function<cplx(double)>& F, long l, const TorusGrid& grid,
               const TreeParams& params);

} // namespace treeharm
