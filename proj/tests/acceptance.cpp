// Acceptance suite. Each check prints one PASS/FAIL line with the measured
// quantities; the process exit code is the number of failed checks, so a
// clean run exits 0.

#include <sys/wait.h>

#include <Eigen/SVD>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "treeharm/norm_lab.hpp"
#include "treeharm/pdo_tree.hpp"
#include "treeharm/pdo_z.hpp"
#include "treeharm/rng.hpp"
#include "treeharm/transforms.hpp"

using namespace treeharm;
namespace fs = std::filesystem;

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

double random_regular_s(Rng& rng, const TreeParams& params) {
    for (;;) {
        const double s = rng.uniform(-params.tau / 2.0, params.tau / 2.0);
        if (lattice_distance(cplx(s, 0.0), params.tau / 2.0) > 1e-3) return s;
    }
}

std::vector<std::shared_ptr<TreeSymbol>> symbol_library(const TreeParams& params) {
    const auto trig_a = trig_multiplier({0.0, 1.0}, params);
    const auto trig_b = trig_multiplier({0.5, 1.0, 0.25}, params);
    return {
        trig_multiplier({1.0}, params),
        trig_a,
        trig_b,
        pole_multiplier(std::cosh(0.45 * params.log_q), params),
        product_symbol(vertex_weight("parity"), trig_a),
        product_symbol(vertex_weight("invdepth"), trig_b),
    };
}

bool check_inversion() {
    double worst_err = 0.0;
    double slowest_ms = 0.0;
    for (int q : {2, 3}) {
        const TreeParams params = TreeParams::make(q);
        const TorusGrid grid = torus_grid(512, params);
        for (int R = 1; R <= 4; ++R) {
            const auto t0 = clock_type::now();
            Rng rng(1234 + 10 * q + R);
            FiniteFunction f = zero_function(R, params);
            for (int trial = 0; trial < 20; ++trial) {
                for (auto& v : f.values) v = rng.cgaussian();
                const HelgasonTable table = helgason_transform(f, grid, std::max(R, 1), params);
                for (std::size_t i = 0; i < f.support.size(); ++i) {
                    worst_err = std::max(
                        worst_err, std::abs(inverse_helgason(table, f.support[i], params) - f.values[i]));
                }
            }
            slowest_ms = std::max(slowest_ms, ms_since(t0));
        }
    }
    const bool ok = worst_err < 1e-9 && slowest_ms < 10000.0;
    std::printf("[1] %s inversion round trip (q in {2,3}, R <= 4, N=512, 20 random f per cell): "
                "max_err=%.3e (tol 1e-09), slowest cell %.0f ms (limit 10000)\n",
                ok ? "PASS" : "FAIL", worst_err, slowest_ms);
    return ok;
}

bool check_spherical_cross_validation() {
    double worst_integral = 0.0;
    double worst_sym = 0.0;
    for (int q : {2, 3}) {
        const TreeParams params = TreeParams::make(q);
        const auto cyls = boundary_cylinders(4, params);
        const auto verts = ball(4, params);
        Rng rng(501 + q);
        for (int i = 0; i < 50; ++i) {
            const cplx z(rng.uniform(-params.tau / 2.0, params.tau / 2.0), rng.uniform(-0.45, 0.45));
            const cplx expo = cplx(0.5) + cplx(0, 1) * z;
            for (const Vertex& x : verts) {
                cplx integral(0.0);
                for (const auto& omega : cyls) {
                    integral += omega.nu_mass * poisson_power(x, omega, expo, params);
                }
                worst_integral = std::max(
                    worst_integral, std::abs(integral - spherical_function(z, x.depth(), params)));
            }
            for (int d = 0; d <= 8; ++d) {
                const cplx v = spherical_function(z, d, params);
                worst_sym = std::max(worst_sym, std::abs(v - spherical_function(-z, d, params)));
                worst_sym = std::max(
                    worst_sym, std::abs(v - spherical_function(z + cplx(params.tau), d, params)));
            }
        }
    }
    const bool ok = worst_integral < 1e-12 && worst_sym < 1e-10;
    std::printf("[2] %s spherical function vs boundary integral (|x| <= 4, 50 strip z per q): "
                "max_diff=%.3e (tol 1e-12), symmetry/periodicity defect=%.3e (tol 1e-10)\n",
                ok ? "PASS" : "FAIL", worst_integral, worst_sym);
    return ok;
}

bool check_c_identities() {
    double worst_sum = 0.0;
    double worst_rho = 0.0;
    for (int q : {2, 3}) {
        const TreeParams params = TreeParams::make(q);
        Rng rng(601 + q);
        for (int i = 0; i < 100; ++i) {
            const double s = random_regular_s(rng, params);
            worst_sum = std::max(worst_sum, std::abs(c_function(cplx(s, 0.0), params) +
                                                     c_function(cplx(-s, 0.0), params) - cplx(1.0)));
            const double rho = plancherel_density(s, params);
            worst_rho = std::max(worst_rho, std::abs(rho - plancherel_density(-s, params)));
            worst_rho = std::max(worst_rho, std::abs(rho - plancherel_density(s + params.tau, params)));
        }
    }
    const bool ok = worst_sum < 1e-12 && worst_rho < 1e-12;
    std::printf("[3] %s c-function identity and density symmetry/periodicity (100 random points "
                "per q): |c(z)+c(-z)-1|=%.3e, density defect=%.3e (tol 1e-12)\n",
                ok ? "PASS" : "FAIL", worst_sum, worst_rho);
    return ok;
}

bool check_contour_shift() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    for (int q : {2, 3}) {
        const TreeParams params = TreeParams::make(q);
        const TorusGrid grid = torus_grid(512, params);
        const std::vector<Vertex> xs = {Vertex{}, make_vertex({0}, params), make_vertex({1}, params)};
        for (const auto& sym : symbol_library(params)) {
            for (double p : {1.2, 1.5, 1.9}) {
                for (const Vertex& x : xs) {
                    for (int d = 0; d <= 8; ++d) {
                        worst = std::max(worst, std::abs(kernel_direct(*sym, x, d, grid, params) -
                                                         kernel_shifted(*sym, x, d, p, grid, params)));
                    }
                }
            }
        }
    }
    const double ms = ms_since(t0);
    const bool ok = worst < 1e-8 && ms < 5000.0;
    std::printf("[4] %s contour-shift kernel identity (6 symbols, p in {1.2,1.5,1.9}, d <= 8, "
                "q in {2,3}): max_diff=%.3e (tol 1e-08), runtime %.0f ms (limit 5000)\n",
                ok ? "PASS" : "FAIL", worst, ms);
    return ok;
}

bool check_partition() {
    const TreeParams params = TreeParams::make(2);
    const TorusGrid grid = torus_grid(256, params);
    const auto library = symbol_library(params);
    Rng rng(701);
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const auto& sym = *library[rep % library.size()];
        FiniteFunction f = zero_function(2, params);
        for (auto& v : f.values) v = rng.cgaussian();
        const FiniteFunction full = apply_pdo(sym, f, grid, params);
        const FiniteFunction plus = apply_split(sym, f, SplitSign::plus, grid, params);
        const FiniteFunction minus = apply_split(sym, f, SplitSign::minus, grid, params);
        for (std::size_t i = 0; i < full.values.size(); ++i) {
            worst = std::max(worst, std::abs(plus.values[i] + minus.values[i] - full.values[i]));
        }
    }
    const bool ok = worst < 1e-13;
    std::printf("[5] %s height-split partition (20 random symbol/function pairs): "
                "max |T+ + T- - T|=%.3e (tol 1e-13)\n",
                ok ? "PASS" : "FAIL", worst);
    return ok;
}

bool check_identity_sections() {
    double worst = 0.0;
    for (int q : {2, 3}) {
        const TreeParams params = TreeParams::make(q);
        const auto one = trig_multiplier({1.0}, params);
        const TorusGrid grid = torus_grid(512, params);
        for (int R = 0; R <= 3; ++R) {
            const KernelSection s = assemble_section(*one, R, grid, params);
            for (Eigen::Index i = 0; i < s.entries.rows(); ++i) {
                for (Eigen::Index j = 0; j < s.entries.cols(); ++j) {
                    const cplx want = (i == j) ? cplx(1.0) : cplx(0.0);
                    worst = std::max(worst, std::abs(s.entries(i, j) - want));
                }
            }
        }
    }
    const bool ok = worst < 1e-9;
    std::printf("[6] %s identity sections (constant symbol, q in {2,3}, R <= 3): "
                "max deviation=%.3e (tol 1e-09)\n",
                ok ? "PASS" : "FAIL", worst);
    return ok;
}

bool check_z_side() {
    const TreeParams params = TreeParams::make(2);
    const TorusGrid grid64 = torus_grid(64, params);

    // identity recovery
    const auto one = z_multiplier(trig_multiplier({1.0}, params));
    const ZSection id_sec = finite_section(*one, 16, grid64, params);
    double id_dev = 0.0;
    for (Eigen::Index i = 0; i < id_sec.matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j < id_sec.matrix.cols(); ++j) {
            id_dev = std::max(id_dev,
                              std::abs(id_sec.matrix(i, j) - (i == j ? cplx(1.0) : cplx(0.0))));
        }
    }

    // Toeplitz spread of a multiplier section
    const auto cosm = z_multiplier(trig_multiplier({0.0, 1.0}, params));
    const ZSection toep = finite_section(*cosm, 16, grid64, params);
    double spread = 0.0;
    for (Eigen::Index i = 0; i + 1 < toep.matrix.rows(); ++i) {
        for (Eigen::Index j = 0; j + 1 < toep.matrix.cols(); ++j) {
            spread = std::max(spread, std::abs(toep.matrix(i, j) - toep.matrix(i + 1, j + 1)));
        }
    }

    // quadrature form vs kernel-sum form
    const auto psi = z_multiplier(trig_multiplier({0.4, 0.9, -0.3}, params));
    Rng rng(801);
    ZFunction f{-4, 4, {}};
    for (long l = f.l_min; l <= f.l_max; ++l) f.values.push_back(rng.cgaussian());
    const ZFunction g = apply_zpdo(*psi, f, grid64, params);
    double feq = 0.0;
    for (long l = f.l_min; l <= f.l_max; ++l) {
        cplx conv(0.0);
        for (long d = f.l_min; d <= f.l_max; ++d) {
            conv += f.at(d) * z_kernel(*psi, l, l - d, grid64, params);
        }
        feq = std::max(feq, std::abs(g.at(l) - conv));
    }

    // p = 2 estimates against a dense singular value decomposition
    double svd_rel = 0.0;
    bool lower_bound_ok = true;
    const auto check_matrix = [&](const Eigen::MatrixXcd& A) {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
        const double sigma = svd.singularValues()(0);
        const NormEstimate est = pnorm_lower_bound(A, 2.0, 20000, 1, {}, 1e-13);
        lower_bound_ok = lower_bound_ok && est.value <= sigma * (1.0 + 1e-10);
        svd_rel = std::max(svd_rel, std::abs(est.value - sigma) / sigma);
    };
    const auto pole = pole_multiplier(std::cosh(0.1 * params.log_q), params);
    const TorusGrid grid512 = torus_grid(512, params);
    for (int R = 1; R <= 5; ++R) {
        check_matrix(assemble_section(*pole, R, grid512, params).entries);  // up to 190 x 190
    }
    const TorusGrid grid256 = torus_grid(256, params);  // resolves the full window
    check_matrix(finite_section(*cosm, 99, grid256, params).matrix);  // 199 x 199
    const auto scaled = z_scaled_multiplier(
        "invdepth", [](long l) { return cplx(1.0 / (1.0 + (l < 0 ? -l : l))); },
        trig_multiplier({0.0, 1.0}, params));
    check_matrix(finite_section(*scaled, 50, grid256, params).matrix);  // 101 x 101

    const bool ok =
        id_dev < 1e-13 && spread < 1e-13 && feq < 1e-12 && svd_rel < 1e-8 && lower_bound_ok;
    std::printf("[7] %s lattice side: identity dev=%.3e (tol 1e-13), Toeplitz spread=%.3e "
                "(tol 1e-13), two-form diff=%.3e (tol 1e-12), p=2 vs SVD rel=%.3e (tol 1e-08, "
                "lower bound %s)\n",
                ok ? "PASS" : "FAIL", id_dev, spread, feq, svd_rel,
                lower_bound_ok ? "held" : "violated");
    return ok;
}

bool check_holomorphy_necessity() {
    const auto t0 = clock_type::now();
    const TreeParams params = TreeParams::make(2);
    const auto pole = pole_multiplier(std::cosh(0.1 * params.log_q), params);
    const TorusGrid grid = torus_grid(512, params);
    const std::vector<int> radii = {1, 2, 3, 4, 5};

    const auto growth = norm_growth_sweep(*pole, 6.0 / 5.0, radii, grid, 7, params);
    bool strictly_increasing = true;
    for (std::size_t i = 1; i < growth.size(); ++i) {
        strictly_increasing = strictly_increasing && growth[i].norm_lb > growth[i - 1].norm_lb;
    }
    const double factor = growth.back().norm_lb / growth.front().norm_lb;
    const double frozen_threshold = 4.0;  // measured 4.70 at first implementation

    const auto flat = norm_growth_sweep(*pole, 2.0, radii, grid, 7, params);
    const double increment =
        (flat.back().norm_lb - flat[flat.size() - 2].norm_lb) / flat[flat.size() - 2].norm_lb;

    const double ms = ms_since(t0);
    const bool growth_ok = strictly_increasing && factor > frozen_threshold;
    const bool stabilize_ok = increment < 0.05;
    const bool ok = growth_ok && stabilize_ok && ms < 60000.0;
    std::printf("[8] %s holomorphy-necessity witness (pole halfwidth 0.1, R in 1..5): p=6/5 "
                "%sstrictly increasing, total factor %.3f (frozen threshold %.1f); p=2 last "
                "increment %.2f%% (required < 5%%); runtime %.0f ms (limit 60000)\n",
                ok ? "PASS" : "FAIL", strictly_increasing ? "" : "NOT ", factor, frozen_threshold,
                100.0 * increment, ms);
    return ok;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "";
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Everything except the runtime footer lines, which are the documented
// nondeterministic part of the output.
std::string drop_runtime_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line, kept;
    while (std::getline(in, line)) {
        if (line.rfind("# runtime_ms", 0) == 0) continue;
        kept += line;
        kept += '\n';
    }
    return kept;
}

int run_cli_in(const std::string& name, const std::string& args, const std::string& env) {
    const fs::path dir = fs::path("acceptance_work") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cmd = "cd '" + dir.string() + "' && " + (env.empty() ? "" : env + " ") + "'" +
                            TREEHARM_CLI_PATH + "' " + args + " > stdout.txt 2> stderr.txt";
    const int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
}

bool check_determinism() {
    const std::string sweep_args =
        "norm-sweep --q 2 --p 1.5 --symbol product:invdepth:trig:1,0.5 --radii 1..3 --nodes 128 "
        "--seed 99 --out out.csv";
    const std::string invert_args =
        "invert-roundtrip --q 2 --radius 2 --nodes 64 --seed 5 --out out.csv";

    bool ok = true;
    ok = ok && run_cli_in("sweep_a", sweep_args, "") == 0;
    ok = ok && run_cli_in("sweep_b", sweep_args, "") == 0;
    ok = ok && run_cli_in("sweep_t1", sweep_args, "TREEHARM_THREADS=1") == 0;
    ok = ok && run_cli_in("sweep_t3", sweep_args, "TREEHARM_THREADS=3") == 0;
    ok = ok && run_cli_in("invert_a", invert_args, "") == 0;
    ok = ok && run_cli_in("invert_b", invert_args, "TREEHARM_THREADS=4") == 0;

    int identical = 0;
    if (ok) {
        const auto grab = [](const std::string& name) {
            return drop_runtime_lines(read_file(fs::path("acceptance_work") / name / "out.csv"));
        };
        const std::string sa = grab("sweep_a");
        if (!sa.empty() && sa == grab("sweep_b")) ++identical;
        if (!sa.empty() && sa == grab("sweep_t1")) ++identical;
        if (!sa.empty() && sa == grab("sweep_t3")) ++identical;
        const std::string ia = grab("invert_a");
        if (!ia.empty() && ia == grab("invert_b")) ++identical;
        ok = identical == 4;
    }
    std::printf("[9] %s determinism: CSV bytes outside runtime footers identical across reruns "
                "and thread counts 1/3/4 (%d of 4 comparisons matched)\n",
                ok ? "PASS" : "FAIL", identical);
    return ok;
}

} // namespace

int main() {
    int failures = 0;
    failures += check_inversion() ? 0 : 1;
    failures += check_spherical_cross_validation() ? 0 : 1;
    failures += check_c_identities() ? 0 : 1;
    failures += check_contour_shift() ? 0 : 1;
    failures += check_partition() ? 0 : 1;
    failures += check_identity_sections() ? 0 : 1;
    failures += check_z_side() ? 0 : 1;
    failures += check_holomorphy_necessity() ? 0 : 1;
    failures += check_determinism() ? 0 : 1;

    if (failures == 0) {
        std::printf("acceptance: all 9 checks passed\n");
    } else {
        std::printf("acceptance: %d of 9 checks failed\n", failures);
    }
    return failures;
}
