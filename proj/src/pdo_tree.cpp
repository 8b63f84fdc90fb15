#include "treeharm/pdo_tree.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "treeharm/csv.hpp"
#include "treeharm/errors.hpp"
#include "treeharm/parallel.hpp"

namespace treeharm {

namespace {
constexpr cplx kI{0.0, 1.0};

// Shared quadrature tables over a grid: Plancherel weights and spherical
// function values phi_{s_k}(d) for d <= dmax.
struct SpectralTables {
    std::vector<double> rho;  // |c(s_k)|^-2
    std::vector<cplx> phi;    // row-major, n_nodes x (dmax+1)
    int dmax = 0;

    SpectralTables(const TorusGrid& grid, int dmax_, const TreeParams& params) : dmax(dmax_) {
        const int N = grid.n_nodes;
        rho.resize(N);
        phi.resize(static_cast<std::size_t>(N) * (dmax + 1));
        for (int k = 0; k < N; ++k) {
            rho[k] = plancherel_density(grid.nodes[k], params);
            for (int d = 0; d <= dmax; ++d) {
                phi[static_cast<std::size_t>(k) * (dmax + 1) + d] =
                    spherical_function(cplx(grid.nodes[k], 0.0), d, params);
            }
        }
    }
};

void validate_shift_exponent(const TreeSymbol& sym, double p) {
    if (!(p > 1.0 && p <= 2.0)) {
        throw invalid_parameter_error(
            "kernel_shifted: p must lie in (1, 2]; use the dual exponent for p > 2");
    }
    const double delta = strip_halfwidth(p);
    if (sym.strip_halfwidth() < delta - 1e-12) {
        throw strip_too_narrow_error("kernel_shifted: symbol strip halfwidth " +
                                     std::to_string(sym.strip_halfwidth()) +
                                     " is narrower than delta_p = " + std::to_string(delta));
    }
}

} // namespace

cplx kernel_direct(const TreeSymbol& sym, const Vertex& x, int d, const TorusGrid& grid,
                   const TreeParams& params) {
    if (d < 0) throw invalid_parameter_error("kernel_direct: distance must be >= 0");
    cplx acc(0.0);
    for (int k = 0; k < grid.n_nodes; ++k) {
        const double s = grid.nodes[k];
        acc += grid.weight * sym.eval(x, cplx(s, 0.0)) * spherical_function(cplx(s, 0.0), d, params) *
               plancherel_density(s, params);
    }
    return params.c_G * acc;
}

cplx kernel_shifted(const TreeSymbol& sym, const Vertex& x, int d, double p,
                    const TorusGrid& grid, const TreeParams& params) {
    if (d < 0) throw invalid_parameter_error("kernel_shifted: distance must be >= 0");
    validate_shift_exponent(sym, p);
    const double delta = strip_halfwidth(p);
    cplx acc(0.0);
    for (int k = 0; k < grid.n_nodes; ++k) {
        const cplx z(grid.nodes[k], delta);
        const cplx plane = std::exp(kI * (grid.nodes[k] * params.log_q * static_cast<double>(d)));
        acc += grid.weight * sym.eval(x, z) * plane / c_function(-z, params);
    }
    return 2.0 * params.c_G * std::pow(static_cast<double>(params.q), -static_cast<double>(d) / p) * acc;
}

KernelSection assemble_section(const TreeSymbol& sym, int R, const TorusGrid& grid,
                               const TreeParams& params) {
    if (R < 0) throw invalid_parameter_error("assemble_section: radius must be >= 0");
    KernelSection section;
    section.ball = ball(R, params);
    section.grid = grid;
    section.symbol_id = sym.id();
    const std::size_t n = section.ball.size();
    const int dmax = 2 * R;
    const int N = grid.n_nodes;
    const SpectralTables tables(grid, dmax, params);

    Eigen::MatrixXi dist(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                distance(section.ball[i], section.ball[j]);
        }
    }

    section.entries.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

    // Kernel values by distance for one row. Grid-node weights fold the
    // symbol, Plancherel density, and quadrature weight into one factor.
    const auto kernel_row = [&](const Vertex& x, std::vector<cplx>& row) {
        std::vector<cplx> folded(static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) {
            folded[k] = grid.weight * tables.rho[k] * sym.eval(x, cplx(grid.nodes[k], 0.0));
        }
        for (int d = 0; d <= dmax; ++d) {
            cplx acc(0.0);
            for (int k = 0; k < N; ++k) {
                acc += folded[k] * tables.phi[static_cast<std::size_t>(k) * (dmax + 1) + d];
            }
            row[d] = params.c_G * acc;
        }
    };

    if (sym.is_multiplier()) {
        std::vector<cplx> row(dmax + 1);
        kernel_row(section.ball.front(), row);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                section.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    row[dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))];
            }
        }
        return section;
    }

    parallel_for(n, [&](std::size_t i) {
        std::vector<cplx> row(dmax + 1);
        kernel_row(section.ball[i], row);
        for (std::size_t j = 0; j < n; ++j) {
            section.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                row[dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))];
        }
    });
    return section;
}

FiniteFunction apply_pdo(const TreeSymbol& sym, const FiniteFunction& f, const TorusGrid& grid,
                         const TreeParams& params) {
    const KernelSection section = assemble_section(sym, f.support_radius, grid, params);
    FiniteFunction out = zero_function(f.support_radius, params);
    const std::size_t n = out.values.size();
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc(0.0);
        for (std::size_t j = 0; j < n; ++j) {
            acc += section.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
                   f.values[j];
        }
        out.values[i] = acc;
    }
    return out;
}

FiniteFunction apply_split(const TreeSymbol& sym, const FiniteFunction& f, SplitSign sign,
                           const TorusGrid& grid, const TreeParams& params) {
    const KernelSection section = assemble_section(sym, f.support_radius, grid, params);
    FiniteFunction out = zero_function(f.support_radius, params);
    const std::size_t n = out.values.size();
    std::vector<int> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = height_omega0(section.ball[i]);
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc(0.0);
        for (std::size_t j = 0; j < n; ++j) {
            const int diff = h[i] - h[j];
            const bool keep = (sign == SplitSign::plus) ? (diff >= 0) : (diff <= -1);
            if (keep) {
                acc += section.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
                       f.values[j];
            }
        }
        out.values[i] = acc;
    }
    return out;
}

std::vector<cplx> apply_multiplier(const MultiplierSymbol& m, const std::vector<cplx>& radial_values,
                                   const TorusGrid& grid, const TreeParams& params) {
    const int dmax = static_cast<int>(radial_values.size()) - 1;
    std::vector<cplx> out(radial_values.size(), cplx(0.0));
    for (int k = 0; k < grid.n_nodes; ++k) {
        const double s = grid.nodes[k];
        const cplx factor = grid.weight * m.eval_multiplier(cplx(s, 0.0)) *
                            spherical_transform(radial_values, cplx(s, 0.0), params) *
                            plancherel_density(s, params);
        for (int d = 0; d <= dmax; ++d) {
            out[d] += factor * spherical_function(cplx(s, 0.0), d, params);
        }
    }
    for (auto& v : out) v *= params.c_G;
    return out;
}

void section_to_csv(const KernelSection& section, const TreeParams& params,
                    const std::string& path, const std::string& p_label) {
    CsvWriter csv({"i", "j", "d", "re", "im"});
    csv.comment("q=" + std::to_string(params.q));
    csv.comment("R=" + std::to_string(section.ball.empty() ? 0 : section.ball.back().depth()));
    csv.comment("N=" + std::to_string(section.grid.n_nodes));
    csv.comment("symbol=" + section.symbol_id);
    csv.comment("p=" + p_label);
    const std::size_t n = section.ball.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx v = section.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            csv.row({std::to_string(i), std::to_string(j),
                     std::to_string(distance(section.ball[i], section.ball[j])), format_g17(v.real()),
                     format_g17(v.imag())});
        }
    }
    csv.write(path);
}

} // namespace treeharm
