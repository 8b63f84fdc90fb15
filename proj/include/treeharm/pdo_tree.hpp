#pragma once

#include <Eigen/Core>
#include <string>

#include "treeharm/symbols.hpp"
#include "treeharm/transforms.hpp"

namespace treeharm {

// Dense kernel matrix K(x,y) of T_Psi over a closed ball, indexed by the
// lexicographic ball order. For multiplier symbols K(x,y) depends only on
// d(x,y).
struct KernelSection {
    std::vector<Vertex> ball;
    Eigen::MatrixXcd entries;
    TorusGrid grid;
    std::string symbol_id;
};

// K(x,y) for d = d(x,y), synthesized on the real torus:
//   c_G sum_k w Psi(x, s_k) phi_{s_k}(d) |c(s_k)|^-2.
cplx kernel_direct(const TreeSymbol& sym, const Vertex& x, int d, const TorusGrid& grid,
                   const TreeParams& params);

// The same kernel through the shifted contour Im z = delta_p, p in (1, 2]:
//   2 c_G q^(-d/p) sum_k w Psi(x, s_k + i delta_p) q^(i s_k d) / c(-s_k - i delta_p).
// Requires a Weyl-invariant symbol with strip halfwidth >= delta_p; agrees
// with kernel_direct up to quadrature error.
cplx kernel_shifted(const TreeSymbol& sym, const Vertex& x, int d, double p,
                    const TorusGrid& grid, const TreeParams& params);

// entries(i,j) = kernel_direct(sym, ball[i], d(ball[i], ball[j])). Row
// assembly is parallel; the result does not depend on the thread count.
KernelSection assemble_section(const TreeSymbol& sym, int R, const TorusGrid& grid,
                               const TreeParams& params);

// (T_Psi f)(x) = sum_y K(x,y) f(y) over the support ball of f.
FiniteFunction apply_pdo(const TreeSymbol& sym, const FiniteFunction& f, const TorusGrid& grid,
                         const TreeParams& params);

enum class SplitSign { plus, minus };

// Height-split halves of T_Psi with respect to the distinguished ray: the
// plus part sums over y with h(x) - h(y) >= 0, the minus part over
// h(x) - h(y) <= -1. The two halves add up to apply_pdo exactly.
FiniteFunction apply_split(const TreeSymbol& sym, const FiniteFunction& f, SplitSign sign,
                           const TorusGrid& grid, const TreeParams& params);

// Radial fast path for multipliers: inverse spherical transform of
// m(s) f^(s) under the Plancherel weight. Input and output are radial
// value vectors indexed by distance from the root.
std::vector<cplx> apply_multiplier(const MultiplierSymbol& m, const std::vector<cplx>& radial_values,
                                   const TorusGrid& grid, const TreeParams& params);

// CSV export: header block (q, R, N, symbol, p) as '#' comment lines, then
// rows i,j,d,re,im with 17-significant-digit floats and LF endings.
void section_to_csv(const KernelSection& section, const TreeParams& params,
                    const std::string& path, const std::string& p_label = "-");

} // namespace treeharm
