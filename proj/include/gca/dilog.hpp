#pragma once

#include <vector>

#include "gca/quadrature.hpp"

namespace gca {

/// Monic polynomial P with P(0) = 1 and nonnegative coefficients:
/// P(x) = 1 + p_1 x + ... + p_{d-1} x^{d-1} + x^d.
struct PolyP {
    std::vector<double> coeffs; // size d+1, coeffs[0] = coeffs[d] = 1

    explicit PolyP(std::vector<double> full_coeffs);
    static PolyP from_interior(std::vector<double> interior);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;
    double derivative(double x) const;
};

/// Coefficient reversal P*(x) = x^d P(1/x).
PolyP poly_reverse(const PolyP& p);

/// P with eps = +1, P* with eps = -1 (the sign-twisted exchange polynomial
/// P(x^eps) x^{((1-eps)/2) d} collapses to coefficient reversal).
PolyP pcirc_transform(const PolyP& p, int eps);

/// Euler dilogarithm Li2(-x) for x >= 0, by series plus the Landen and
/// inversion relations. Absolute error well below 1e-14.
double li2_neg(double x);

/// Rogers dilogarithm L(x) = -Li2(-x) - (1/2) log(x) log(1+x), x > 0.
double rogers_dilog(double x);

struct HigherDilogConfig {
    double series_cutoff = 1e-3; // integrate [0, delta] by the log-series
    int series_terms = 12;
    QuadratureConfig quad{1e-12, 2000};
};

/// Higher-degree Rogers dilogarithm
///   L_P(x) = (1/2) int_0^x (log P(y)/y - log(y) P'(y)/P(y)) dy,
/// with the integrable log(y) endpoint singularity handled in closed form
/// via the series of log P on [0, delta]. Absolute error <= 1e-10.
double rogers_dilog_higher(const PolyP& p, double x, const HigherDilogConfig& cfg = {});

/// The same function through the Euler form
///   int_0^x log P(y)/y dy - (1/2) log(x) log P(x),
/// kept as an independent evaluation route.
double euler_form_dilog_higher(const PolyP& p, double x, const HigherDilogConfig& cfg = {});

/// L_P(inf) = L_P(1) + L_{P*}(1); the reversal identity makes the limit an
/// exact finite evaluation with no cutoff error.
double rogers_dilog_infinity(const PolyP& p, const HigherDilogConfig& cfg = {});

/// int_{lower}^{upper} u^{eps*s - 1} / P(u^eps) du for 1 <= s <= d-1; for
/// eps = -1 the integrand is rewritten as u^{d-s-1}/P*(u), which is regular
/// at u = 0. Bounds may come in either order; lower may be 0.
double kernel_integral(const PolyP& p, int s, int eps, double lower, double upper,
                       const QuadratureConfig& quad = {});

/// int_0^inf u^{s-1} / P(u) du, convergent for 1 <= s <= d-1; evaluated as
/// the [0,1] head plus the reversed-polynomial head for the tail.
double kernel_integral_to_infinity(const PolyP& p, int s, const QuadratureConfig& quad = {});

} // namespace gca
