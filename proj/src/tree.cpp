#include "treeharm/tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "treeharm/errors.hpp"

namespace treeharm {

namespace {

void check_word(const std::vector<int>& word, const TreeParams& params, const char* what) {
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int letter = word[i];
        const int limit = (i == 0) ? params.q + 1 : params.q;
        if (letter < 0 || letter >= limit) {
            throw invalid_word_error(std::string(what) + ": letter " + std::to_string(letter) +
                                     " at position " + std::to_string(i) + " out of range [0," +
                                     std::to_string(limit - 1) + "] for q=" + std::to_string(params.q));
        }
    }
}

// Depth-first lexicographic enumeration of all extensions of `prefix` up to
// total length `max_len`. Emits the prefix itself before its children, so the
// overall order is plain lexicographic on words.
template <typename Emit>
void enumerate_words(std::vector<int>& prefix, int max_len, int q, Emit&& emit) {
    emit(prefix);
    if (static_cast<int>(prefix.size()) >= max_len) return;
    const int fanout = prefix.empty() ? q + 1 : q;
    for (int letter = 0; letter < fanout; ++letter) {
        prefix.push_back(letter);
        enumerate_words(prefix, max_len, q, emit);
        prefix.pop_back();
    }
}

} // namespace

Vertex make_vertex(const std::vector<int>& word, const TreeParams& params) {
    check_word(word, params, "make_vertex");
    return Vertex{word};
}

std::size_t lcp_length(const std::vector<int>& a, const std::vector<int>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

int distance(const Vertex& x, const Vertex& y) {
    const std::size_t lcp = lcp_length(x.word, y.word);
    return static_cast<int>(x.word.size() + y.word.size() - 2 * lcp);
}

std::vector<Vertex> ball(int R, const TreeParams& params) {
    if (R < 0) throw invalid_parameter_error("ball: radius must be >= 0");
    std::vector<Vertex> out;
    std::vector<int> word;
    enumerate_words(word, R, params.q, [&](const std::vector<int>& w) { out.push_back(Vertex{w}); });
    return out;
}

std::vector<BoundaryCylinder> boundary_cylinders(int D, const TreeParams& params) {
    if (D < 1) throw invalid_parameter_error("boundary_cylinders: depth must be >= 1");
    const double mass = 1.0 / ((params.q + 1) * std::pow(static_cast<double>(params.q), D - 1));
    std::vector<BoundaryCylinder> out;
    std::vector<int> word;
    enumerate_words(word, D, params.q, [&](const std::vector<int>& w) {
        if (static_cast<int>(w.size()) == D) out.push_back(BoundaryCylinder{w, mass});
    });
    return out;
}

int height(const Vertex& x, const BoundaryCylinder& omega) {
    if (omega.depth() < x.depth()) {
        throw insufficient_depth_error("height: cylinder depth " + std::to_string(omega.depth()) +
                                       " < vertex depth " + std::to_string(x.depth()));
    }
    const std::size_t lcp = lcp_length(x.word, omega.word);
    return static_cast<int>(2 * lcp) - x.depth();
}

std::complex<double> poisson_power(const Vertex& x, const BoundaryCylinder& omega,
                                   std::complex<double> exponent, const TreeParams& params) {
    const int h = height(x, omega);
    return std::exp(exponent * (params.log_q * h));
}

Vertex sigma_vertex(long l, const TreeParams& params) {
    (void)params;
    Vertex v;
    if (l >= 0) {
        v.word.assign(static_cast<std::size_t>(l), 0);
    } else {
        v.word.assign(static_cast<std::size_t>(-l), 0);
        v.word[0] = 1;
    }
    return v;
}

int height_omega0(const Vertex& x) {
    std::size_t zeros = 0;
    while (zeros < x.word.size() && x.word[zeros] == 0) ++zeros;
    return static_cast<int>(2 * zeros) - x.depth();
}

BoundaryCylinder omega0_cylinder(int D, const TreeParams& params) {
    if (D < 1) throw invalid_parameter_error("omega0_cylinder: depth must be >= 1");
    const double mass = 1.0 / ((params.q + 1) * std::pow(static_cast<double>(params.q), D - 1));
    return BoundaryCylinder{std::vector<int>(static_cast<std::size_t>(D), 0), mass};
}

} // namespace treeharm
