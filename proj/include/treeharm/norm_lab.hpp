#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "treeharm/pdo_tree.hpp"
#include "treeharm/pdo_z.hpp"

namespace treeharm {

// Result of the induced p-norm estimation. The value is a certified lower
// bound: it equals ||A x||_p for the reported unit maximizer x.
struct NormEstimate {
    double p = 2.0;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    Eigen::VectorXcd maximizer;
};

// Fixed-point iteration on the dual-norm characterization of the induced
// p-norm (the power-method generalization). Runs from the all-ones vector,
// a seeded random vector, and any supplied warm starts, and returns the best
// quotient found. Deterministic given the seed. Stops a start when the
// estimate changes by less than stop_tol relative, or after max_iters.
NormEstimate pnorm_lower_bound(const Eigen::MatrixXcd& A, double p, int max_iters = 500,
                               std::uint64_t seed = 1,
                               const std::vector<Eigen::VectorXcd>& warm_starts = {},
                               double stop_tol = 1e-10);

struct SweepRow {
    int q = 2;
    double p = 2.0;
    int R = 0;
    int N = 0;
    std::string symbol_id;
    double norm_lb = 0.0;
    int iters = 0;
    bool converged = false;
    std::uint64_t seed = 0;
    double runtime_ms = 0.0;
};

// Finite-section norms of T_Psi over a list of radii (sorted ascending).
// Each cell gets the seed splitmix64(master_seed ^ cell_index), and the
// maximizer of the previous radius is injected as a warm start, which makes
// norm_lb nondecreasing in R by construction (sections are nested).
std::vector<SweepRow> norm_growth_sweep(const TreeSymbol& sym, double p,
                                        const std::vector<int>& radii, const TorusGrid& grid,
                                        std::uint64_t master_seed, const TreeParams& params);

// The induced lattice symbol psi(l, s) = Psi(omega0_l, s - i delta_p) along
// the distinguished geodesic.
std::shared_ptr<ZSymbol> induced_z_symbol(std::shared_ptr<TreeSymbol> sym, double p,
                                          const TreeParams& params);

// Norm estimates of the induced lattice section and of the tree section of
// T_Psi at matching scale (tree radius min(L, tree_radius_cap), capped
// because ball sizes grow exponentially). No cross-domain inequality is
// asserted; the two estimates are reported side by side.
struct TransferenceReport {
    NormEstimate z_estimate;
    NormEstimate tree_estimate;
    long L = 0;
    int R = 0;
    std::string z_symbol_id;
    std::string tree_symbol_id;
};

TransferenceReport transference_probe(std::shared_ptr<TreeSymbol> sym, double p, long L,
                                      const TorusGrid& grid, std::uint64_t seed,
                                      const TreeParams& params, int tree_radius_cap = 4);

} // namespace treeharm
