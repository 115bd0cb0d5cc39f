#include "gca/dilog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gca {

PolyP::PolyP(std::vector<double> full_coeffs) : coeffs(std::move(full_coeffs)) {
    if (coeffs.size() < 2) throw std::invalid_argument("polynomial degree must be >= 1");
    if (coeffs.front() != 1.0 || coeffs.back() != 1.0)
        throw std::invalid_argument("polynomial must have unit constant and leading coefficient");
    for (double c : coeffs)
        if (!(c >= 0.0) || !std::isfinite(c))
            throw std::invalid_argument("polynomial coefficients must be nonnegative and finite");
}

PolyP PolyP::from_interior(std::vector<double> interior) {
    std::vector<double> full;
    full.reserve(interior.size() + 2);
    full.push_back(1.0);
    for (double c : interior) full.push_back(c);
    full.push_back(1.0);
    return PolyP(std::move(full));
}

double PolyP::operator()(double x) const {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

double PolyP::derivative(double x) const {
    const int d = degree();
    double v = 0.0;
    for (int i = d; i >= 1; --i) v = v * x + coeffs[i] * i;
    return v;
}

PolyP poly_reverse(const PolyP& p) {
    std::vector<double> c(p.coeffs.rbegin(), p.coeffs.rend());
    return PolyP(std::move(c));
}

PolyP pcirc_transform(const PolyP& p, int eps) {
    if (eps == 1) return p;
    if (eps == -1) return poly_reverse(p);
    throw std::invalid_argument("sign must be +1 or -1");
}

double li2_neg(double x) {
    if (!(x >= 0.0)) throw std::domain_error("li2_neg requires x >= 0");
    if (x == 0.0) return 0.0;
    if (x > 1.0) {
        // Li2(-x) = -pi^2/6 - log(x)^2/2 - Li2(-1/x)
        const double lg = std::log(x);
        return -std::numbers::pi * std::numbers::pi / 6.0 - 0.5 * lg * lg - li2_neg(1.0 / x);
    }
    if (x > 0.5) {
        // Landen: Li2(-x) = -Li2(x/(1+x)) - log(1+x)^2/2
        const double w = x / (1.0 + x);
        double sum = 0.0, term = w;
        for (int n = 1; n < 80; ++n) {
            sum += term / (static_cast<double>(n) * n);
            term *= w;
            if (term < 1e-19) break;
        }
        const double lg = std::log1p(x);
        return -sum - 0.5 * lg * lg;
    }
    double sum = 0.0, term = -x;
    for (int n = 1; n < 80; ++n) {
        sum += term / (static_cast<double>(n) * n);
        term *= -x;
        if (std::abs(term) < 1e-19) break;
    }
    return sum;
}

double rogers_dilog(double x) {
    if (!(x >= 0.0)) throw std::domain_error("rogers_dilog requires x > 0");
    if (x == 0.0) return 0.0;
    return -li2_neg(x) - 0.5 * std::log(x) * std::log1p(x);
}

namespace {

// power-series coefficients of log P: g_m = p_m - (1/m) sum_{j<m} j g_j p_{m-j}
std::vector<double> log_series(const PolyP& p, int terms) {
    const int d = p.degree();
    std::vector<double> g(terms + 1, 0.0);
    for (int m = 1; m <= terms; ++m) {
        double acc = m <= d ? p.coeffs[m] : 0.0;
        for (int j = 1; j < m; ++j) {
            const int idx = m - j;
            if (idx <= d) acc -= j * g[j] * p.coeffs[idx] / m;
        }
        g[m] = acc;
    }
    return g;
}

double log_poly(const PolyP& p, double x) {
    // log P(x) through log1p of the coefficient tail, stable as x -> 0
    double tail = 0.0;
    for (int i = p.degree(); i >= 1; --i) tail = tail * x + p.coeffs[i];
    return std::log1p(tail * x);
}

} // namespace

double rogers_dilog_higher(const PolyP& p, double x, const HigherDilogConfig& cfg) {
    if (!(x >= 0.0)) throw std::domain_error("rogers_dilog_higher requires x > 0");
    if (x == 0.0) return 0.0;
    const double delta = std::min(cfg.series_cutoff, x);
    const auto g = log_series(p, cfg.series_terms);

    // closed form of (1/2) int_0^delta (log P/y - log y P'/P) dy from the series:
    // (1/2) sum_m g_m delta^m (2/m - log delta)
    double head = 0.0;
    const double ld = std::log(delta);
    double dm = 1.0;
    for (int m = 1; m <= cfg.series_terms; ++m) {
        dm *= delta;
        head += 0.5 * g[m] * dm * (2.0 / m - ld);
    }
    if (x <= delta) return head;

    const auto integrand = [&p](double y) {
        return 0.5 * (log_poly(p, y) / y - std::log(y) * p.derivative(y) / p(y));
    };
    return head + integrate_adaptive(integrand, delta, x, cfg.quad);
}

double euler_form_dilog_higher(const PolyP& p, double x, const HigherDilogConfig& cfg) {
    if (!(x >= 0.0)) throw std::domain_error("euler_form_dilog_higher requires x > 0");
    if (x == 0.0) return 0.0;
    const double delta = std::min(cfg.series_cutoff, x);
    const auto g = log_series(p, cfg.series_terms);
    double head = 0.0;
    double dm = 1.0;
    for (int m = 1; m <= cfg.series_terms; ++m) {
        dm *= delta;
        head += g[m] * dm / m;
    }
    double integral = head;
    if (x > delta)
        integral += integrate_adaptive([&p](double y) { return log_poly(p, y) / y; }, delta, x,
                                       cfg.quad);
    return integral - 0.5 * std::log(x) * log_poly(p, x);
}

double rogers_dilog_infinity(const PolyP& p, const HigherDilogConfig& cfg) {
    return rogers_dilog_higher(p, 1.0, cfg) + rogers_dilog_higher(poly_reverse(p), 1.0, cfg);
}

double kernel_integral(const PolyP& p, int s, int eps, double lower, double upper,
                       const QuadratureConfig& quad) {
    const int d = p.degree();
    if (s < 1 || s > d - 1) throw std::invalid_argument("kernel exponent out of range");
    if (!(lower >= 0.0) || !(upper >= 0.0))
        throw std::invalid_argument("kernel bounds must be nonnegative");
    if (lower == upper) return 0.0;
    if (eps == 1) {
        const int m = s - 1;
        return integrate_adaptive(
            [&p, m](double u) { return std::pow(u, static_cast<double>(m)) / p(u); }, lower,
            upper, quad);
    }
    if (eps == -1) {
        // u^{-s-1} / P(u^{-1}) = u^{d-s-1} / P*(u), regular at u = 0
        const PolyP rev = poly_reverse(p);
        const int m = d - s - 1;
        return integrate_adaptive(
            [&rev, m](double u) { return std::pow(u, static_cast<double>(m)) / rev(u); }, lower,
            upper, quad);
    }
    throw std::invalid_argument("sign must be +1 or -1");
}

double kernel_integral_to_infinity(const PolyP& p, int s, const QuadratureConfig& quad) {
    const int d = p.degree();
    if (s < 1 || s > d - 1) throw std::invalid_argument("kernel exponent out of range");
    // tail: substituting v = 1/u gives int_1^inf u^{s-1}/P(u) du
    //       = int_0^1 v^{d-s-1}/P*(v) dv
    const PolyP rev = poly_reverse(p);
    const auto head = integrate_adaptive(
        [&p, s](double u) { return std::pow(u, static_cast<double>(s - 1)) / p(u); }, 0.0, 1.0,
        quad);
    const auto tail = integrate_adaptive(
        [&rev, d, s](double v) { return std::pow(v, static_cast<double>(d - s - 1)) / rev(v); },
        0.0, 1.0, quad);
    return head + tail;
}

} // namespace gca
