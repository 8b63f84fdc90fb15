#pragma once

#include <complex>
#include <vector>

#include "treeharm/params.hpp"

namespace treeharm {

using cplx = std::complex<double>;

// Midpoint quadrature grid on the spectral torus [-tau/2, tau/2).
// Nodes s_k = -tau/2 + (k + 1/2) tau/N never hit the lattice (tau/2)Z when
// N is even, so integrands built from the c-function stay regular.
struct TorusGrid {
    int n_nodes = 0;
    std::vector<double> nodes;
    double weight = 0.0;  // tau / N, uniform
};

TorusGrid torus_grid(int N, const TreeParams& params);

// Meromorphic coefficient function
//   c(z) = (q^(1/2)/(q+1)) * (q^(1/2+iz) - q^(-1/2-iz)) / (q^(iz) - q^(-iz)).
// Throws pole_proximity_error near the pole set (tau/2)Z on the real axis.
cplx c_function(cplx z, const TreeParams& params);

// Plancherel density |c(s)|^(-2) = 1/(c(s) c(-s)) for real s, extended
// continuously by 0 on the lattice (tau/2)Z.
double plancherel_density(double s, const TreeParams& params);

// Elementary spherical function phi_z evaluated at distance d, using the
// closed form with its three branches. Even and tau-periodic in z.
cplx spherical_function(cplx z, int dist, const TreeParams& params);

// Complex distance from z to the lattice step*Z (used for branch selection).
double lattice_distance(cplx z, double step);

} // namespace treeharm
