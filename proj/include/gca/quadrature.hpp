#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gca {

struct QuadratureConfig {
    double abs_tol = 1e-11;
    int max_subdivisions = 2000;
};

namespace detail {

// Gauss-Kronrod 7-15 node/weight table on [0,1] of the half-interval:
// column 0 abscissa offset, column 1 Gauss-7 weight, column 2 Kronrod-15 weight.
inline constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469387755102040816327, 0.209482141084727828012999174891714},
    {0.405845151377397166906606412076961, 0.381830050505118944950369775488975, 0.190350578064785409913256402421014},
    {0.741531185599394439863864773280788, 0.279705391489276667901467771423780, 0.140653259715525918745189590510238},
    {0.949107912342758524526189684047851, 0.129484966168869693270611432679082, 0.063092092629978553290700663189204},
    {0.207784955007898467600689403773245, 0.0, 0.204432940075298892414161999234649},
    {0.586087235467691130294144838258730, 0.0, 0.169004726639267902826583426598550},
    {0.864864423359769072789712788640926, 0.0, 0.104790010322250183839876322541518},
    {0.991455371120812639206854697526329, 0.0, 0.022935322010529224963732008058970},
};

template <class F>
void gk15(F&& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = kGK15[0][1] * f0;
    double k15 = kGK15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kGK15[i][1] * fi;
        k15 += kGK15[i][2] * fi;
    }
    value = k15 * half;
    // conservative estimate: the raw G7/K15 difference
    error = std::abs((k15 - g7) * half);
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] (either orientation)
/// to an absolute tolerance. Bisects the interval with the largest error
/// estimate; throws std::runtime_error when the subdivision budget runs out.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
    if (!(cfg.abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) { std::swap(a, b); sign = -1.0; }
    if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("integration bounds must be finite");

    struct Piece { double a, b, value, error; };
    const auto evaluate = [&f](Piece& p) {
        detail::gk15(f, p.a, p.b, p.value, p.error);
        if (!std::isfinite(p.value) || !std::isfinite(p.error))
            throw std::runtime_error("adaptive quadrature hit a non-finite integrand value");
    };
    std::vector<Piece> pieces;
    Piece root{a, b, 0, 0};
    evaluate(root);
    pieces.push_back(root);

    double total_err = root.error;
    int splits = 0;
    while (total_err > cfg.abs_tol) {
        if (++splits > cfg.max_subdivisions)
            throw std::runtime_error("adaptive quadrature failed to converge");
        size_t worst = 0;
        for (size_t i = 1; i < pieces.size(); ++i)
            if (pieces[i].error > pieces[worst].error) worst = i;
        const Piece p = pieces[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b)
            throw std::runtime_error("adaptive quadrature interval underflow");
        Piece left{p.a, mid, 0, 0}, right{mid, p.b, 0, 0};
        evaluate(left);
        evaluate(right);
        pieces[worst] = left;
        pieces.push_back(right);
        total_err += left.error + right.error - p.error;
    }

    double sum = 0.0, comp = 0.0;
    for (const auto& p : pieces) {
        const double s = sum + p.value;
        comp += std::abs(sum) >= std::abs(p.value) ? (sum - s) + p.value : (p.value - s) + sum;
        sum = s;
    }
    return sign * (sum + comp);
}

} // namespace gca
