#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "treeharm/params.hpp"

namespace treeharm {

// A vertex of the homogeneous tree, encoded as a root-anchored child-index
// word. The first letter picks one of the q+1 subtrees of the root, every
// later letter one of the q forward children. The empty word is the root o.
//
// The encoding gives distance via the longest common prefix and a canonical
// lexicographic order (a prefix sorts before its extensions).
struct Vertex {
    std::vector<int> word;

    int depth() const { return static_cast<int>(word.size()); }
    bool operator==(const Vertex& other) const { return word == other.word; }
    bool operator!=(const Vertex& other) const { return word != other.word; }
    bool operator<(const Vertex& other) const { return word < other.word; }
};

// A depth-D initial segment of a boundary ray, carrying its nu-mass
// 1/((q+1) q^(D-1)). Cylinders of a fixed depth partition the boundary.
struct BoundaryCylinder {
    std::vector<int> word;
    double nu_mass = 0.0;

    int depth() const { return static_cast<int>(word.size()); }
};

Vertex make_vertex(const std::vector<int>& word, const TreeParams& params);

std::size_t lcp_length(const std::vector<int>& a, const std::vector<int>& b);

int distance(const Vertex& x, const Vertex& y);

// All vertices with |x| <= R in lexicographic order, root first.
// Count is 1 + (q+1)(q^R - 1)/(q - 1).
std::vector<Vertex> ball(int R, const TreeParams& params);

// All depth-D cylinders in lexicographic order, each with its nu-mass.
std::vector<BoundaryCylinder> boundary_cylinders(int D, const TreeParams& params);

// Busemann height h_omega(x) = lim_j (j - d(x, omega_j)) = 2*lcp - |x|.
// Requires cylinder depth >= |x| so the limit is attained.
int height(const Vertex& x, const BoundaryCylinder& omega);

// p(x,omega)^exponent = q^(exponent * h_omega(x)).
std::complex<double> poisson_power(const Vertex& x, const BoundaryCylinder& omega,
                                   std::complex<double> exponent, const TreeParams& params);

// The distinguished doubly infinite geodesic omega_0: the positive ray is
// the all-zeros word, the negative ray starts with letter 1 and continues
// with zeros. sigma_vertex(l) is the vertex identified with omega_0(l).
Vertex sigma_vertex(long l, const TreeParams& params);

// Height of x with respect to the positive ray of omega_0 (the all-zeros
// boundary point): 2*(count of leading zero letters) - |x|.
int height_omega0(const Vertex& x);

// The depth-D cylinder around the all-zeros boundary point.
BoundaryCylinder omega0_cylinder(int D, const TreeParams& params);

} // namespace treeharm
