#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "treeharm/symbols.hpp"

namespace treeharm {

// One flat bag of experiment parameters shared by all subcommands. Fields a
// given subcommand does not use are ignored by it.
struct RunConfig {
    int q = 2;
    double p = 1.5;
    int radius = 3;
    long window = 16;
    int nodes = 512;
    int depth = -1;  // boundary cylinder depth, -1 means max(radius, 1)
    std::string symbol = "one";
    std::uint64_t seed = 1;
    double tol = 1e-8;
    std::string out;      // CSV path, empty selects "<command>.csv"
    std::string radii;    // sweep radii, "1,2,3" or "1..5"; empty means 1..radius
    int funcs = 20;       // random test functions for the round trip
    int tree_cap = 4;     // transference tree radius cap
    bool plot = false;    // also emit a gnuplot script next to the CSV
};

// Flat key=value file ('#' starts a comment, blank lines ignored).
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Throws config_error on invalid combinations (q < 2, odd N, p outside
// (1, infinity), negative sizes, depth below radius).
void validate_config(const RunConfig& cfg);

// Symbol mini-language used by --symbol and config files:
//   one                     constant symbol 1
//   trig:a0,a1,...          sum of a_k cos(k z log q)
//   pole:alpha or pole:hw=h 1/(alpha - cos(z log q)), h sets alpha = cosh(h log q)
//   product:w:<multiplier>  u(x) m(z) with w in {one, parity, invdepth}
// Separators ',' and ';' are interchangeable in coefficient lists.
std::shared_ptr<TreeSymbol> parse_symbol(const std::string& spec, const TreeParams& params);

// Radii list "1,2,3" or "a..b"; empty yields 1..fallback_max.
std::vector<int> parse_radii(const std::string& spec, int fallback_max);

} // namespace treeharm
