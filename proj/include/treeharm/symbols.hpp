#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "treeharm/spectral.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

// Symbol Psi(x, z) of a pseudo-differential operator on the tree. Symbols
// declare the halfwidth of the strip on which they evaluate, and expose
// z-derivatives up to order 2 (analytic where available, central finite
// differences with step 1e-5 otherwise). Implementations must be pure.
class TreeSymbol {
public:
    virtual ~TreeSymbol() = default;

    virtual cplx eval(const Vertex& x, cplx z) const = 0;

    // k in {0,1,2}; k=0 is eval.
    virtual cplx derivative(const Vertex& x, cplx z, int k) const;

    virtual double strip_halfwidth() const = 0;

    virtual std::string id() const = 0;

    // True when eval does not depend on x, enabling the radial fast path.
    virtual bool is_multiplier() const { return false; }

    // Trigonometric bandwidth in the q^(is) modes when known, -1 otherwise.
    virtual int bandwidth() const { return -1; }
};

// A symbol m(z) independent of the vertex.
class MultiplierSymbol : public TreeSymbol {
public:
    virtual cplx eval_multiplier(cplx z) const = 0;
    virtual cplx multiplier_derivative(cplx z, int k) const;

    cplx eval(const Vertex&, cplx z) const override { return eval_multiplier(z); }
    cplx derivative(const Vertex&, cplx z, int k) const override { return multiplier_derivative(z, k); }
    bool is_multiplier() const override { return true; }
};

// Symbol psi(l, s) on the lattice Z, tau-periodic in Re s.
class ZSymbol {
public:
    virtual ~ZSymbol() = default;
    virtual cplx eval(long l, cplx s) const = 0;
    virtual cplx derivative(long l, cplx s, int k) const;  // in s; FD default
    virtual std::string id() const = 0;
    virtual int bandwidth() const { return -1; }
};

// m(z) = sum_k a_k cos(k z log q). Entire, Weyl-invariant, bandwidth K.
std::shared_ptr<MultiplierSymbol> trig_multiplier(const std::vector<double>& coeffs,
                                                  const TreeParams& params);

// m(z) = 1/(alpha - cos(z log q)) with alpha > 1. Weyl-invariant and
// holomorphic exactly on |Im z| < arccosh(alpha)/log q; evaluation outside
// that open strip raises symbol_domain_error.
std::shared_ptr<MultiplierSymbol> pole_multiplier(double alpha, const TreeParams& params);

// Bounded vertex factor u(x), selected by name: "one" (u = 1), "parity"
// (u = 1 + (-1)^|x|/2), "invdepth" (u = 1/(1+|x|)).
struct VertexWeight {
    std::string name;
    std::function<cplx(const Vertex&)> fn;
};

VertexWeight vertex_weight(const std::string& name);

// Psi(x, z) = u(x) m(z).
std::shared_ptr<TreeSymbol> product_symbol(const VertexWeight& u,
                                           std::shared_ptr<MultiplierSymbol> m);

// psi(l, s) = u(l) m(s) on the lattice, with u given by a bounded callable.
std::shared_ptr<ZSymbol> z_scaled_multiplier(const std::string& name,
                                             const std::function<cplx(long)>& u,
                                             std::shared_ptr<MultiplierSymbol> m);

// psi(l, s) = m(s) on the lattice.
std::shared_ptr<ZSymbol> z_multiplier(std::shared_ptr<MultiplierSymbol> m);

struct WeylReport {
    double max_even_defect = 0.0;
    double max_period_defect = 0.0;
    bool pass = false;
};

// Samples |Psi(x,z) - Psi(x,-z)| and |Psi(x,z) - Psi(x,z+tau)| at seeded
// random strip points (kept at least 1e-6 inside the declared strip) and over
// a fixed vertex set; pass iff both defects stay below tol.
WeylReport check_weyl_invariance(const TreeSymbol& sym, int n_samples, double tol,
                                 const TreeParams& params, std::uint64_t seed = 12345);

// Sampled sup over x in x_set, s on s_grid, k in {0,1,2} of
// |d^k/dz^k Psi(x, s + iv)|. A lower estimate of the true sup.
double cv_seminorm(const TreeSymbol& sym, const std::vector<Vertex>& x_set,
                   const std::vector<double>& s_grid, double v);

// Uniform endpoint grid s_j = -tau/2 + j tau/M, j = 0..M-1. Nested under
// doubling, which makes sampled sups monotone under refinement.
std::vector<double> uniform_sgrid(int M, const TreeParams& params);

} // namespace treeharm
