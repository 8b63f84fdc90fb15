#include "treeharm/runner.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include "treeharm/csv.hpp"
#include "treeharm/errors.hpp"
#include "treeharm/norm_lab.hpp"
#include "treeharm/pdo_tree.hpp"
#include "treeharm/rng.hpp"

namespace treeharm {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::string out_path(const RunConfig& cfg, const char* command) {
    return cfg.out.empty() ? std::string(command) + ".csv" : cfg.out;
}

std::string bool_label(bool b) { return b ? "true" : "false"; }

void emit_plot_script(const std::string& csv_path, const std::string& x_col,
                      const std::string& y_col, const std::string& title) {
    std::ofstream script(csv_path + ".gnuplot", std::ios::binary);
    if (!script) throw invalid_input_error("cannot write plot script next to '" + csv_path + "'");
    script << "set datafile separator ','\n"
           << "set key autotitle columnhead\n"
           << "set xlabel '" << x_col << "'\n"
           << "set ylabel '" << y_col << "'\n"
           << "set title '" << title << "'\n"
           << "plot '" << csv_path << "' using '" << x_col << "':'" << y_col << "' with linespoints\n";
}

} // namespace

std::string word_label(const Vertex& x) {
    if (x.word.empty()) return "o";
    std::string s;
    for (std::size_t i = 0; i < x.word.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(x.word[i]);
    }
    return s;
}

int cmd_invert_roundtrip(const RunConfig& cfg) {
    validate_config(cfg);
    const auto t0 = clock_type::now();
    const TreeParams params = TreeParams::make(cfg.q);
    const TorusGrid grid = torus_grid(cfg.nodes, params);
    const int D = cfg.depth >= 0 ? cfg.depth : std::max(cfg.radius, 1);

    FiniteFunction f = zero_function(cfg.radius, params);
    std::vector<double> vertex_err(f.support.size(), 0.0);
    Rng rng(cfg.seed);
    double max_err = 0.0;
    for (int trial = 0; trial < cfg.funcs; ++trial) {
        for (auto& v : f.values) v = rng.cgaussian();
        const HelgasonTable table = helgason_transform(f, grid, D, params);
        for (std::size_t i = 0; i < f.support.size(); ++i) {
            const double err = std::abs(inverse_helgason(table, f.support[i], params) - f.values[i]);
            vertex_err[i] = std::max(vertex_err[i], err);
            max_err = std::max(max_err, err);
        }
    }

    CsvWriter csv({"i", "word", "err"});
    csv.comment("command=invert-roundtrip");
    csv.comment("q=" + std::to_string(cfg.q) + " R=" + std::to_string(cfg.radius) +
                " N=" + std::to_string(cfg.nodes) + " D=" + std::to_string(D) +
                " funcs=" + std::to_string(cfg.funcs) + " seed=" + std::to_string(cfg.seed) +
                " tol=" + format_g17(cfg.tol));
    for (std::size_t i = 0; i < f.support.size(); ++i) {
        csv.row({std::to_string(i), word_label(f.support[i]), format_g17(vertex_err[i])});
    }
    csv.footer("runtime_ms=" + format_g17(elapsed_ms(t0)));
    const std::string path = out_path(cfg, "invert-roundtrip");
    csv.write(path);

    const bool ok = max_err < cfg.tol;
    std::printf("invert-roundtrip: q=%d R=%d N=%d max_err=%.3e tol=%.3e %s (%s)\n", cfg.q,
                cfg.radius, cfg.nodes, max_err, cfg.tol, ok ? "PASS" : "FAIL", path.c_str());
    return ok ? 0 : 1;
}

int cmd_kernel_check(const RunConfig& cfg) {
    validate_config(cfg);
    if (!(cfg.p > 1.0 && cfg.p <= 2.0)) {
        throw config_error("kernel-check compares the shifted contour, which needs p in (1, 2]");
    }
    const auto t0 = clock_type::now();
    const TreeParams params = TreeParams::make(cfg.q);
    const TorusGrid grid = torus_grid(cfg.nodes, params);
    const auto sym = parse_symbol(cfg.symbol, params);

    CsvWriter csv({"word", "d", "direct_re", "direct_im", "shifted_re", "shifted_im", "abs_diff"});
    csv.comment("command=kernel-check");
    csv.comment("q=" + std::to_string(cfg.q) + " p=" + format_g17(cfg.p) +
                " R=" + std::to_string(cfg.radius) + " N=" + std::to_string(cfg.nodes) +
                " symbol=" + sym->id() + " tol=" + format_g17(cfg.tol));
    double max_diff = 0.0;
    for (const Vertex& x : ball(std::min(cfg.radius, 1), params)) {
        for (int d = 0; d <= 2 * cfg.radius; ++d) {
            const cplx direct = kernel_direct(*sym, x, d, grid, params);
            const cplx shifted = kernel_shifted(*sym, x, d, cfg.p, grid, params);
            const double diff = std::abs(direct - shifted);
            max_diff = std::max(max_diff, diff);
            csv.row({word_label(x), std::to_string(d), format_g17(direct.real()),
                     format_g17(direct.imag()), format_g17(shifted.real()),
                     format_g17(shifted.imag()), format_g17(diff)});
        }
    }
    csv.footer("runtime_ms=" + format_g17(elapsed_ms(t0)));
    const std::string path = out_path(cfg, "kernel-check");
    csv.write(path);

    const bool ok = max_diff < cfg.tol;
    std::printf("kernel-check: q=%d p=%g symbol=%s max_diff=%.3e tol=%.3e %s (%s)\n", cfg.q, cfg.p,
                sym->id().c_str(), max_diff, cfg.tol, ok ? "PASS" : "FAIL", path.c_str());
    return ok ? 0 : 1;
}

int cmd_norm_sweep(const RunConfig& cfg) {
    validate_config(cfg);
    const auto t0 = clock_type::now();
    const TreeParams params = TreeParams::make(cfg.q);
    const TorusGrid grid = torus_grid(cfg.nodes, params);
    const auto sym = parse_symbol(cfg.symbol, params);
    const std::vector<int> radii = parse_radii(cfg.radii, cfg.radius);

    const std::vector<SweepRow> rows = norm_growth_sweep(*sym, cfg.p, radii, grid, cfg.seed, params);

    CsvWriter csv({"q", "p", "R", "N", "symbol", "norm_lb", "iters", "converged", "seed"});
    csv.comment("command=norm-sweep");
    for (const SweepRow& row : rows) {
        csv.row({std::to_string(row.q), format_g17(row.p), std::to_string(row.R),
                 std::to_string(row.N), row.symbol_id, format_g17(row.norm_lb),
                 std::to_string(row.iters), bool_label(row.converged), std::to_string(row.seed)});
    }
    // Runtime lives in footer comments so the data block is byte-reproducible.
    for (const SweepRow& row : rows) {
        csv.footer("runtime_ms R=" + std::to_string(row.R) + ": " + format_g17(row.runtime_ms));
    }
    csv.footer("runtime_ms total=" + format_g17(elapsed_ms(t0)));
    const std::string path = out_path(cfg, "norm-sweep");
    csv.write(path);
    if (cfg.plot) emit_plot_script(path, "R", "norm_lb", "finite-section norm growth");

    std::printf("norm-sweep: q=%d p=%g symbol=%s rows=%zu last_norm_lb=%.12g (%s)\n", cfg.q, cfg.p,
                sym->id().c_str(), rows.size(), rows.back().norm_lb, path.c_str());
    return 0;
}

int cmd_transference(const RunConfig& cfg) {
    validate_config(cfg);
    if (!(cfg.p > 1.0 && cfg.p <= 2.0)) {
        throw config_error("transference shifts the contour by delta_p, which needs p in (1, 2]");
    }
    const auto t0 = clock_type::now();
    const TreeParams params = TreeParams::make(cfg.q);
    const TorusGrid grid = torus_grid(cfg.nodes, params);
    const auto sym = parse_symbol(cfg.symbol, params);

    const TransferenceReport report =
        transference_probe(sym, cfg.p, cfg.window, grid, cfg.seed, params, cfg.tree_cap);

    CsvWriter csv({"q", "p", "L", "R", "N", "symbol", "z_norm_lb", "tree_norm_lb", "z_iters",
                   "tree_iters", "z_converged", "tree_converged", "seed"});
    csv.comment("command=transference");
    csv.row({std::to_string(cfg.q), format_g17(cfg.p), std::to_string(report.L),
             std::to_string(report.R), std::to_string(cfg.nodes), report.tree_symbol_id,
             format_g17(report.z_estimate.value), format_g17(report.tree_estimate.value),
             std::to_string(report.z_estimate.iterations),
             std::to_string(report.tree_estimate.iterations),
             bool_label(report.z_estimate.converged), bool_label(report.tree_estimate.converged),
             std::to_string(cfg.seed)});
    csv.footer("runtime_ms=" + format_g17(elapsed_ms(t0)));
    const std::string path = out_path(cfg, "transference");
    csv.write(path);

    std::printf("transference: q=%d p=%g symbol=%s z_norm_lb=%.12g tree_norm_lb=%.12g (%s)\n",
                cfg.q, cfg.p, report.tree_symbol_id.c_str(), report.z_estimate.value,
                report.tree_estimate.value, path.c_str());
    return 0;
}

int cmd_spherical_table(const RunConfig& cfg) {
    validate_config(cfg);
    const auto t0 = clock_type::now();
    const TreeParams params = TreeParams::make(cfg.q);

    // Real z from 0 to tau/2 inclusive; evenness and periodicity make this
    // half period a full picture.
    const int z_steps = 8;
    CsvWriter csv({"z", "d", "phi_re", "phi_im"});
    csv.comment("command=spherical-table");
    csv.comment("q=" + std::to_string(cfg.q) + " d_max=" + std::to_string(cfg.radius));
    for (int j = 0; j <= z_steps; ++j) {
        const double z = j * (params.tau / 2.0) / z_steps;
        for (int d = 0; d <= cfg.radius; ++d) {
            const cplx phi = spherical_function(cplx(z, 0.0), d, params);
            csv.row({format_g17(z), std::to_string(d), format_g17(phi.real()),
                     format_g17(phi.imag())});
        }
    }
    csv.footer("runtime_ms=" + format_g17(elapsed_ms(t0)));
    const std::string path = out_path(cfg, "spherical-table");
    csv.write(path);
    if (cfg.plot) emit_plot_script(path, "d", "phi_re", "spherical function values");

    std::printf("spherical-table: q=%d d_max=%d rows=%d (%s)\n", cfg.q, cfg.radius,
                (z_steps + 1) * (cfg.radius + 1), path.c_str());
    return 0;
}

} // namespace treeharm
