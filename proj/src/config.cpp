#include "treeharm/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "treeharm/errors.hpp"

namespace treeharm {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw config_error(what + ": cannot parse number '" + s + "'");
    }
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw config_error(what + ": cannot parse integer '" + s + "'");
    }
}

} // namespace

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw config_error("config file '" + path + "' cannot be opened");
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("config file '" + path + "' line " + std::to_string(lineno) +
                               ": expected key=value");
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

void validate_config(const RunConfig& cfg) {
    if (cfg.q < 2) throw config_error("q must be >= 2");
    if (cfg.nodes < 4 || cfg.nodes % 2 != 0) throw config_error("nodes must be even and >= 4");
    if (!(cfg.p > 1.0) || !std::isfinite(cfg.p)) throw config_error("p must lie in (1, infinity)");
    if (cfg.radius < 0) throw config_error("radius must be >= 0");
    if (cfg.window < 0) throw config_error("window must be >= 0");
    if (cfg.depth >= 0 && cfg.depth < cfg.radius) throw config_error("depth must be >= radius");
    if (!(cfg.tol >= 0.0)) throw config_error("tol must be >= 0");
    if (cfg.funcs < 1) throw config_error("funcs must be >= 1");
    if (cfg.tree_cap < 0) throw config_error("tree-cap must be >= 0");
}

std::shared_ptr<TreeSymbol> parse_symbol(const std::string& spec, const TreeParams& params) {
    const std::string s = trim(spec);
    if (s.empty()) throw config_error("empty symbol spec");
    if (s == "one") return trig_multiplier({1.0}, params);

    const auto colon = s.find(':');
    const std::string kind = colon == std::string::npos ? s : s.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);

    if (kind == "trig") {
        if (rest.empty()) throw config_error("trig symbol needs coefficients, e.g. trig:0,1");
        std::string normalized = rest;
        for (char& c : normalized) {
            if (c == ';') c = ',';
        }
        std::vector<double> coeffs;
        for (const std::string& tok : split(normalized, ',')) {
            coeffs.push_back(parse_double(trim(tok), "trig coefficient"));
        }
        return trig_multiplier(coeffs, params);
    }
    if (kind == "pole") {
        if (rest.empty()) throw config_error("pole symbol needs alpha, e.g. pole:1.05 or pole:hw=0.1");
        double alpha;
        if (rest.rfind("hw=", 0) == 0) {
            const double hw = parse_double(rest.substr(3), "pole halfwidth");
            if (!(hw > 0.0)) throw config_error("pole halfwidth must be > 0");
            alpha = std::cosh(hw * params.log_q);
        } else {
            alpha = parse_double(rest, "pole alpha");
        }
        if (!(alpha > 1.0)) throw config_error("pole alpha must be > 1");
        return pole_multiplier(alpha, params);
    }
    if (kind == "product") {
        const auto second = rest.find(':');
        if (second == std::string::npos) {
            throw config_error("product symbol needs product:<weight>:<multiplier>");
        }
        const std::string weight_name = rest.substr(0, second);
        const std::string base_spec = rest.substr(second + 1);
        const auto base = parse_symbol(base_spec, params);
        const auto mult = std::dynamic_pointer_cast<MultiplierSymbol>(base);
        if (!mult) throw config_error("product base '" + base_spec + "' must be a multiplier");
        return product_symbol(vertex_weight(weight_name), mult);
    }
    throw config_error("unknown symbol kind '" + kind + "' (expected one, trig, pole, product)");
}

std::vector<int> parse_radii(const std::string& spec, int fallback_max) {
    std::vector<int> radii;
    const std::string s = trim(spec);
    if (s.empty()) {
        for (int r = 1; r <= fallback_max; ++r) radii.push_back(r);
        if (radii.empty()) radii.push_back(0);
        return radii;
    }
    const auto dots = s.find("..");
    if (dots != std::string::npos) {
        const long a = parse_long(trim(s.substr(0, dots)), "radii start");
        const long b = parse_long(trim(s.substr(dots + 2)), "radii end");
        if (a < 0 || b < a) throw config_error("radii range must satisfy 0 <= a <= b");
        for (long r = a; r <= b; ++r) radii.push_back(static_cast<int>(r));
        return radii;
    }
    for (const std::string& tok : split(s, ',')) {
        const long r = parse_long(trim(tok), "radius");
        if (r < 0) throw config_error("radii must be >= 0");
        radii.push_back(static_cast<int>(r));
    }
    return radii;
}

} // namespace treeharm
