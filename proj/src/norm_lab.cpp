#include "treeharm/norm_lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "treeharm/errors.hpp"
#include "treeharm/rng.hpp"

namespace treeharm {

namespace {

double pnorm(const Eigen::VectorXcd& v, double p) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]), p);
    return std::pow(acc, 1.0 / p);
}

// Duality map of the p-norm: w_i = |v_i|^(p-1) * phase(v_i), computed on the
// vector rescaled by its max modulus so large exponents cannot overflow.
// Only the direction matters to the iteration.
Eigen::VectorXcd dual_map(const Eigen::VectorXcd& v, double r) {
    const double m = v.cwiseAbs().maxCoeff();
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(v.size());
    if (m == 0.0) return w;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a == 0.0) continue;
        w[i] = std::pow(a / m, r - 1.0) * (v[i] / a);
    }
    return w;
}

struct StartOutcome {
    double best = 0.0;
    Eigen::VectorXcd best_x;
    int iterations = 0;
    bool converged = false;
};

StartOutcome run_start(const Eigen::MatrixXcd& A, double p, Eigen::VectorXcd x, int max_iters,
                       double stop_tol) {
    StartOutcome out;
    const double pdual = p / (p - 1.0);
    double np = pnorm(x, p);
    if (np == 0.0) {
        out.converged = true;
        return out;
    }
    x /= np;
    double prev = -1.0;
    for (int it = 1; it <= max_iters; ++it) {
        out.iterations = it;
        const Eigen::VectorXcd y = A * x;
        const double g = pnorm(y, p);
        if (g > out.best) {
            out.best = g;
            out.best_x = x;
        }
        if (g == 0.0 || std::abs(g - prev) <= stop_tol * std::max(g, 1.0)) {
            out.converged = true;
            break;
        }
        prev = g;
        const Eigen::VectorXcd z = A.adjoint() * dual_map(y, p);
        x = dual_map(z, pdual);
        np = pnorm(x, p);
        if (np == 0.0) {
            out.converged = true;
            break;
        }
        x /= np;
    }
    return out;
}

} // namespace

NormEstimate pnorm_lower_bound(const Eigen::MatrixXcd& A, double p, int max_iters,
                               std::uint64_t seed, const std::vector<Eigen::VectorXcd>& warm_starts,
                               double stop_tol) {
    if (!(p > 1.0) || !std::isfinite(p)) {
        throw invalid_parameter_error("pnorm_lower_bound: p must lie in (1, infinity)");
    }
    if (A.rows() != A.cols() || A.rows() == 0) {
        throw invalid_input_error("pnorm_lower_bound: matrix must be square and nonempty");
    }
    if (!A.allFinite()) throw invalid_input_error("pnorm_lower_bound: matrix has non-finite entries");

    const Eigen::Index n = A.rows();
    std::vector<Eigen::VectorXcd> starts;
    starts.push_back(Eigen::VectorXcd::Ones(n));
    Rng rng(seed);
    Eigen::VectorXcd random_start(n);
    for (Eigen::Index i = 0; i < n; ++i) random_start[i] = rng.cgaussian();
    starts.push_back(random_start);
    for (const auto& w : warm_starts) {
        if (w.size() == n) starts.push_back(w);
    }

    NormEstimate est;
    est.p = p;
    est.seed = seed;
    est.converged = true;
    for (const auto& s : starts) {
        const StartOutcome out = run_start(A, p, s, max_iters, stop_tol);
        est.iterations += out.iterations;
        est.converged = est.converged && out.converged;
        if (out.best > est.value) {
            est.value = out.best;
            est.maximizer = out.best_x;
        }
    }
    // Recompute from the stored unit maximizer so the reported value is the
    // verifiable quotient ||A x||_p itself.
    if (est.maximizer.size() == n) {
        est.value = pnorm(A * est.maximizer, p);
    } else {
        est.maximizer = Eigen::VectorXcd::Zero(n);
        est.value = 0.0;
    }
    return est;
}

namespace {

// Indices of the radius-R sub-ball inside a larger ball: lexicographic order
// restricts to sub-balls, so depth filtering preserves positions.
std::vector<std::size_t> subball_indices(const std::vector<Vertex>& big, int R) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (big[i].depth() <= R) idx.push_back(i);
    }
    return idx;
}

constexpr int kSweepMaxIters = 5000;
constexpr double kSweepStopTol = 1e-12;

} // namespace

std::vector<SweepRow> norm_growth_sweep(const TreeSymbol& sym, double p,
                                        const std::vector<int>& radii, const TorusGrid& grid,
                                        std::uint64_t master_seed, const TreeParams& params) {
    if (radii.empty()) throw invalid_parameter_error("norm_growth_sweep: empty radii list");
    std::vector<int> sorted = radii;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < 0) throw invalid_parameter_error("norm_growth_sweep: radii must be >= 0");

    std::vector<SweepRow> rows;
    Eigen::VectorXcd prev_maximizer;
    int prev_R = -1;
    for (std::size_t cell = 0; cell < sorted.size(); ++cell) {
        const int R = sorted[cell];
        const auto t0 = std::chrono::steady_clock::now();
        const KernelSection section = assemble_section(sym, R, grid, params);
        const Eigen::Index n = section.entries.rows();

        std::vector<Eigen::VectorXcd> warm;
        if (prev_maximizer.size() > 0) {
            // Zero-padded previous maximizer; guarantees the new estimate is
            // at least the previous one on the nested section.
            Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(n);
            const std::vector<std::size_t> idx = subball_indices(section.ball, prev_R);
            if (static_cast<Eigen::Index>(idx.size()) == prev_maximizer.size()) {
                for (std::size_t i = 0; i < idx.size(); ++i) {
                    padded[static_cast<Eigen::Index>(idx[i])] = prev_maximizer[static_cast<Eigen::Index>(i)];
                }
                warm.push_back(padded);
            }
        }

        const std::uint64_t cell_seed = splitmix64(master_seed ^ static_cast<std::uint64_t>(cell));
        const NormEstimate est =
            pnorm_lower_bound(section.entries, p, kSweepMaxIters, cell_seed, warm, kSweepStopTol);
        const auto t1 = std::chrono::steady_clock::now();

        SweepRow row;
        row.q = params.q;
        row.p = p;
        row.R = R;
        row.N = grid.n_nodes;
        row.symbol_id = section.symbol_id;
        row.norm_lb = est.value;
        row.iters = est.iterations;
        row.converged = est.converged;
        row.seed = cell_seed;
        row.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back(row);

        prev_maximizer = est.maximizer;
        prev_R = R;
    }
    return rows;
}

namespace {

class InducedZSymbol final : public ZSymbol {
public:
    InducedZSymbol(std::shared_ptr<TreeSymbol> sym, double delta, const TreeParams& params)
        : sym_(std::move(sym)), delta_(delta), params_(params) {
        id_ = "induced:" + sym_->id();
    }

    cplx eval(long l, cplx s) const override {
        return sym_->eval(sigma_vertex(l, params_), s - cplx(0.0, delta_));
    }

    cplx derivative(long l, cplx s, int k) const override {
        return sym_->derivative(sigma_vertex(l, params_), s - cplx(0.0, delta_), k);
    }

    std::string id() const override { return id_; }
    int bandwidth() const override { return sym_->bandwidth(); }

private:
    std::shared_ptr<TreeSymbol> sym_;
    double delta_;
    TreeParams params_;
    std::string id_;
};

} // namespace

std::shared_ptr<ZSymbol> induced_z_symbol(std::shared_ptr<TreeSymbol> sym, double p,
                                          const TreeParams& params) {
    if (!sym) throw invalid_parameter_error("induced_z_symbol: null symbol");
    if (!(p > 1.0 && p <= 2.0)) {
        throw invalid_parameter_error("induced_z_symbol: p must lie in (1, 2]");
    }
    const double delta = strip_halfwidth(p);
    if (sym->strip_halfwidth() < delta - 1e-12) {
        throw strip_too_narrow_error("induced_z_symbol: symbol strip halfwidth " +
                                     std::to_string(sym->strip_halfwidth()) +
                                     " is narrower than delta_p = " + std::to_string(delta));
    }
    return std::make_shared<InducedZSymbol>(std::move(sym), delta, params);
}

TransferenceReport transference_probe(std::shared_ptr<TreeSymbol> sym, double p, long L,
                                      const TorusGrid& grid, std::uint64_t seed,
                                      const TreeParams& params, int tree_radius_cap) {
    if (L < 0) throw invalid_parameter_error("transference_probe: window must be >= 0");
    if (tree_radius_cap < 0) throw invalid_parameter_error("transference_probe: negative radius cap");
    const std::shared_ptr<ZSymbol> induced = induced_z_symbol(sym, p, params);

    TransferenceReport report;
    report.L = L;
    report.R = static_cast<int>(std::min<long>(L, tree_radius_cap));
    report.z_symbol_id = induced->id();
    report.tree_symbol_id = sym->id();

    const ZSection zsec = finite_section(*induced, L, grid, params);
    report.z_estimate = pnorm_lower_bound(zsec.matrix, p, kSweepMaxIters,
                                          splitmix64(seed ^ 0x5au), {}, kSweepStopTol);

    const KernelSection tsec = assemble_section(*sym, report.R, grid, params);
    report.tree_estimate = pnorm_lower_bound(tsec.entries, p, kSweepMaxIters,
                                             splitmix64(seed ^ 0xa5u), {}, kSweepStopTol);
    return report;
}

} // namespace treeharm
