#include "treeharm/symbols.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "treeharm/errors.hpp"
#include "treeharm/rng.hpp"

namespace treeharm {

namespace {

constexpr double kFdStep = 1e-5;
constexpr cplx kI{0.0, 1.0};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Central finite differences of a callable, step 1e-5.
template <typename F>
cplx fd_derivative(const F& f, cplx z, int k) {
    switch (k) {
        case 0: return f(z);
        case 1: return (f(z + kFdStep) - f(z - kFdStep)) / (2.0 * kFdStep);
        case 2: return (f(z + kFdStep) - 2.0 * f(z) + f(z - kFdStep)) / (kFdStep * kFdStep);
        default: throw invalid_parameter_error("derivative order must be 0, 1 or 2");
    }
}

class TrigMultiplier final : public MultiplierSymbol {
public:
    TrigMultiplier(std::vector<double> coeffs, const TreeParams& params)
        : coeffs_(std::move(coeffs)), log_q_(params.log_q) {
        if (coeffs_.empty()) throw invalid_parameter_error("trig_multiplier: empty coefficient list");
        std::string id = "trig:";
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k) id += ';';
            id += fmt_double(coeffs_[k]);
        }
        id_ = id;
        bandwidth_ = 0;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != 0.0) bandwidth_ = static_cast<int>(k);
        }
    }

    cplx eval_multiplier(cplx z) const override {
        cplx acc(0.0);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            acc += coeffs_[k] * std::cos(static_cast<double>(k) * log_q_ * z);
        }
        return acc;
    }

    cplx multiplier_derivative(cplx z, int k) const override {
        if (k == 0) return eval_multiplier(z);
        cplx acc(0.0);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            const double w = static_cast<double>(j) * log_q_;
            if (k == 1) {
                acc += coeffs_[j] * (-w) * std::sin(w * z);
            } else if (k == 2) {
                acc += coeffs_[j] * (-w * w) * std::cos(w * z);
            } else {
                throw invalid_parameter_error("derivative order must be 0, 1 or 2");
            }
        }
        return acc;
    }

    double strip_halfwidth() const override { return 0.5; }
    std::string id() const override { return id_; }
    int bandwidth() const override { return bandwidth_; }

private:
    std::vector<double> coeffs_;
    double log_q_;
    std::string id_;
    int bandwidth_ = 0;
};

class PoleMultiplier final : public MultiplierSymbol {
public:
    PoleMultiplier(double alpha, const TreeParams& params) : alpha_(alpha), log_q_(params.log_q) {
        if (!(alpha > 1.0)) throw invalid_parameter_error("pole_multiplier: alpha must be > 1");
        halfwidth_ = std::acosh(alpha) / log_q_;
        id_ = "pole:" + fmt_double(alpha);
    }

    cplx eval_multiplier(cplx z) const override {
        check_strip(z);
        return 1.0 / (alpha_ - std::cos(log_q_ * z));
    }

    cplx multiplier_derivative(cplx z, int k) const override {
        check_strip(z);
        const cplx u = alpha_ - std::cos(log_q_ * z);
        const cplx s = std::sin(log_q_ * z);
        const cplx c = std::cos(log_q_ * z);
        switch (k) {
            case 0: return 1.0 / u;
            case 1: return -log_q_ * s / (u * u);
            case 2: return log_q_ * log_q_ * (2.0 * s * s / (u * u * u) - c / (u * u));
            default: throw invalid_parameter_error("derivative order must be 0, 1 or 2");
        }
    }

    double strip_halfwidth() const override { return halfwidth_; }
    std::string id() const override { return id_; }

private:
    void check_strip(cplx z) const {
        if (std::abs(z.imag()) >= halfwidth_ - 1e-12) {
            throw symbol_domain_error("pole_multiplier: |Im z| = " + fmt_double(std::abs(z.imag())) +
                                      " outside the open holomorphy strip of halfwidth " +
                                      fmt_double(halfwidth_));
        }
    }

    double alpha_;
    double log_q_;
    double halfwidth_ = 0.0;
    std::string id_;
};

class ProductSymbol final : public TreeSymbol {
public:
    ProductSymbol(VertexWeight u, std::shared_ptr<MultiplierSymbol> m)
        : u_(std::move(u)), m_(std::move(m)) {
        id_ = "product:" + u_.name + ":" + m_->id();
    }

    cplx eval(const Vertex& x, cplx z) const override { return u_.fn(x) * m_->eval_multiplier(z); }

    cplx derivative(const Vertex& x, cplx z, int k) const override {
        return u_.fn(x) * m_->multiplier_derivative(z, k);
    }

    double strip_halfwidth() const override { return m_->strip_halfwidth(); }
    std::string id() const override { return id_; }
    int bandwidth() const override { return m_->bandwidth(); }

private:
    VertexWeight u_;
    std::shared_ptr<MultiplierSymbol> m_;
    std::string id_;
};

class ZMultiplier final : public ZSymbol {
public:
    explicit ZMultiplier(std::shared_ptr<MultiplierSymbol> m) : m_(std::move(m)) {}
    cplx eval(long, cplx s) const override { return m_->eval_multiplier(s); }
    cplx derivative(long, cplx s, int k) const override { return m_->multiplier_derivative(s, k); }
    std::string id() const override { return "z:" + m_->id(); }
    int bandwidth() const override { return m_->bandwidth(); }

private:
    std::shared_ptr<MultiplierSymbol> m_;
};

class ZScaledMultiplier final : public ZSymbol {
public:
    ZScaledMultiplier(std::string name, std::function<cplx(long)> u,
                      std::shared_ptr<MultiplierSymbol> m)
        : name_(std::move(name)), u_(std::move(u)), m_(std::move(m)) {}

    cplx eval(long l, cplx s) const override { return u_(l) * m_->eval_multiplier(s); }
    cplx derivative(long l, cplx s, int k) const override {
        return u_(l) * m_->multiplier_derivative(s, k);
    }
    std::string id() const override { return "zscaled:" + name_ + ":" + m_->id(); }
    int bandwidth() const override { return m_->bandwidth(); }

private:
    std::string name_;
    std::function<cplx(long)> u_;
    std::shared_ptr<MultiplierSymbol> m_;
};

} // namespace

cplx TreeSymbol::derivative(const Vertex& x, cplx z, int k) const {
    return fd_derivative([&](cplx w) { return eval(x, w); }, z, k);
}

cplx MultiplierSymbol::multiplier_derivative(cplx z, int k) const {
    return fd_derivative([&](cplx w) { return eval_multiplier(w); }, z, k);
}

cplx ZSymbol::derivative(long l, cplx s, int k) const {
    return fd_derivative([&](cplx w) { return eval(l, w); }, s, k);
}

std::shared_ptr<MultiplierSymbol> trig_multiplier(const std::vector<double>& coeffs,
                                                  const TreeParams& params) {
    return std::make_shared<TrigMultiplier>(coeffs, params);
}

std::shared_ptr<MultiplierSymbol> pole_multiplier(double alpha, const TreeParams& params) {
    return std::make_shared<PoleMultiplier>(alpha, params);
}

VertexWeight vertex_weight(const std::string& name) {
    if (name == "one") {
        return {name, [](const Vertex&) { return cplx(1.0); }};
    }
    if (name == "parity") {
        return {name, [](const Vertex& x) {
                    return cplx(1.0 + (x.depth() % 2 == 0 ? 0.5 : -0.5));
                }};
    }
    if (name == "invdepth") {
        return {name, [](const Vertex& x) { return cplx(1.0 / (1.0 + x.depth())); }};
    }
    throw invalid_parameter_error("vertex_weight: unknown weight '" + name + "'");
}

std::shared_ptr<TreeSymbol> product_symbol(const VertexWeight& u,
                                           std::shared_ptr<MultiplierSymbol> m) {
    if (!m) throw invalid_parameter_error("product_symbol: null multiplier");
    return std::make_shared<ProductSymbol>(u, std::move(m));
}

std::shared_ptr<ZSymbol> z_multiplier(std::shared_ptr<MultiplierSymbol> m) {
    if (!m) throw invalid_parameter_error("z_multiplier: null multiplier");
    return std::make_shared<ZMultiplier>(std::move(m));
}

std::shared_ptr<ZSymbol> z_scaled_multiplier(const std::string& name,
                                             const std::function<cplx(long)>& u,
                                             std::shared_ptr<MultiplierSymbol> m) {
    if (!m) throw invalid_parameter_error("z_scaled_multiplier: null multiplier");
    return std::make_shared<ZScaledMultiplier>(name, u, std::move(m));
}

WeylReport check_weyl_invariance(const TreeSymbol& sym, int n_samples, double tol,
                                 const TreeParams& params, std::uint64_t seed) {
    if (n_samples < 1) throw invalid_parameter_error("check_weyl_invariance: n_samples must be >= 1");
    const std::vector<Vertex> x_set =
        sym.is_multiplier() ? std::vector<Vertex>{Vertex{}} : ball(2, params);
    const double delta = std::min(sym.strip_halfwidth(), 0.5);
    const double im_max = delta > 1e-6 ? delta - 1e-6 : 0.0;
    Rng rng(seed);
    WeylReport report;
    for (int i = 0; i < n_samples; ++i) {
        const double re = rng.uniform(-params.tau / 2.0, params.tau / 2.0);
        const double im = im_max > 0.0 ? rng.uniform(-im_max, im_max) : 0.0;
        const cplx z(re, im);
        for (const Vertex& x : x_set) {
            const cplx v = sym.eval(x, z);
            report.max_even_defect = std::max(report.max_even_defect, std::abs(v - sym.eval(x, -z)));
            report.max_period_defect =
                std::max(report.max_period_defect, std::abs(v - sym.eval(x, z + params.tau)));
        }
    }
    report.pass = report.max_even_defect < tol && report.max_period_defect < tol;
    return report;
}

double cv_seminorm(const TreeSymbol& sym, const std::vector<Vertex>& x_set,
                   const std::vector<double>& s_grid, double v) {
    double sup = 0.0;
    for (const Vertex& x : x_set) {
        for (double s : s_grid) {
            for (int k = 0; k <= 2; ++k) {
                sup = std::max(sup, std::abs(sym.derivative(x, cplx(s, v), k)));
            }
        }
    }
    return sup;
}

std::vector<double> uniform_sgrid(int M, const TreeParams& params) {
    if (M < 1) throw invalid_grid_error("uniform_sgrid: M must be >= 1");
    std::vector<double> s(M);
    for (int j = 0; j < M; ++j) s[j] = -params.tau / 2.0 + j * params.tau / M;
    return s;
}

} // namespace treeharm
