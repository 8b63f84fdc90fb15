// treeharm: harmonic analysis on homogeneous trees, experiment runner.
//
// Subcommands: invert-roundtrip, kernel-check, norm-sweep, transference,
// spherical-table. All accept a flat key=value config file via --config;
// command-line flags win over config values. Exit codes: 0 success,
// 1 tolerance failure, 2 usage or config error.

#include <cstdio>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "treeharm/errors.hpp"
#include "treeharm/runner.hpp"

namespace {

struct CommonOptions {
    treeharm::RunConfig cfg;
    std::string config_path;
    CLI::App* sub = nullptr;

    void attach(CLI::App* app) {
        sub = app;
        app->add_option("--config", config_path, "flat key=value config file");
        app->add_option("--q", cfg.q, "branching parameter, tree degree is q+1");
        app->add_option("--p", cfg.p, "Lebesgue exponent in (1, infinity)");
        app->add_option("--radius", cfg.radius, "ball radius R");
        app->add_option("--window", cfg.window, "lattice window halfwidth L");
        app->add_option("--nodes", cfg.nodes, "torus quadrature nodes N (even, >= 4)");
        app->add_option("--depth", cfg.depth, "boundary cylinder depth (default max(R, 1))");
        app->add_option("--symbol", cfg.symbol,
                        "symbol spec: one | trig:a0,a1,... | pole:alpha | pole:hw=h | "
                        "product:{one,parity,invdepth}:<multiplier>");
        app->add_option("--seed", cfg.seed, "master RNG seed");
        app->add_option("--tol", cfg.tol, "tolerance for pass/fail commands");
        app->add_option("--out", cfg.out, "output CSV path");
        app->add_option("--radii", cfg.radii, "sweep radii, e.g. 1,2,3 or 1..5");
        app->add_option("--funcs", cfg.funcs, "number of random test functions");
        app->add_option("--tree-cap", cfg.tree_cap, "transference tree radius cap");
        app->add_flag("--plot", cfg.plot, "emit a gnuplot script next to the CSV");
    }

    // Config file values apply only where no flag was given, so flags win.
    void load_config() {
        if (config_path.empty()) return;
        const auto kv = treeharm::parse_config_file(config_path);
        const auto set_if_unset = [&](const char* key, auto& field) {
            const auto it = kv.find(key);
            if (it == kv.end() || sub->count(std::string("--") + key) > 0) return;
            std::istringstream stream(it->second);
            stream >> field;
            if (stream.fail()) {
                throw treeharm::config_error(std::string("config key '") + key +
                                             "': cannot parse '" + it->second + "'");
            }
        };
        set_if_unset("q", cfg.q);
        set_if_unset("p", cfg.p);
        set_if_unset("radius", cfg.radius);
        set_if_unset("window", cfg.window);
        set_if_unset("nodes", cfg.nodes);
        set_if_unset("depth", cfg.depth);
        set_if_unset("seed", cfg.seed);
        set_if_unset("tol", cfg.tol);
        set_if_unset("funcs", cfg.funcs);
        set_if_unset("tree-cap", cfg.tree_cap);
        // String-valued keys take the raw remainder of the line.
        const auto set_string = [&](const char* key, std::string& field) {
            const auto it = kv.find(key);
            if (it != kv.end() && sub->count(std::string("--") + key) == 0) field = it->second;
        };
        set_string("symbol", cfg.symbol);
        set_string("out", cfg.out);
        set_string("radii", cfg.radii);
        if (kv.count("plot") && sub->count("--plot") == 0) cfg.plot = kv.at("plot") == "true";
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic analysis on homogeneous trees"};
    app.require_subcommand(1);

    CommonOptions invert, kernel, sweep, transfer, table;
    invert.attach(app.add_subcommand("invert-roundtrip",
                                     "transform and reconstruct random ball functions"));
    kernel.attach(app.add_subcommand("kernel-check",
                                     "compare direct and contour-shifted operator kernels"));
    sweep.attach(app.add_subcommand("norm-sweep", "finite-section norm growth over radii"));
    transfer.attach(app.add_subcommand("transference",
                                       "induced lattice symbol vs tree section norms"));
    table.attach(app.add_subcommand("spherical-table", "tabulate spherical function values"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (invert.sub->parsed()) {
            invert.load_config();
            return treeharm::cmd_invert_roundtrip(invert.cfg);
        }
        if (kernel.sub->parsed()) {
            kernel.load_config();
            return treeharm::cmd_kernel_check(kernel.cfg);
        }
        if (sweep.sub->parsed()) {
            sweep.load_config();
            return treeharm::cmd_norm_sweep(sweep.cfg);
        }
        if (transfer.sub->parsed()) {
            transfer.load_config();
            return treeharm::cmd_transference(transfer.cfg);
        }
        if (table.sub->parsed()) {
            table.load_config();
            return treeharm::cmd_spherical_table(table.cfg);
        }
    } catch (const treeharm::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 2;
    }
    return 2;
}
