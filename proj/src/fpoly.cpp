#include "gca/fpoly.hpp"

#include <cmath>
#include <stdexcept>

namespace gca {

FPattern f_polynomials_along(const ExchangeData& ex, std::span<const int> directions) {
    if (directions.size() > static_cast<size_t>(kMaxSequenceLength))
        throw std::invalid_argument("mutation sequence exceeds engine cap");

    FPattern pat;
    pat.ex = ex;
    pat.vars = VarTable(ex);
    pat.directions.assign(directions.begin(), directions.end());
    pat.cpattern = compute_c_pattern(ex, directions);

    const int nv = pat.vars.total;
    const SparsePoly one = SparsePoly::constant(nv, 1);

    std::vector<SparsePoly> f(ex.n, one);
    std::vector<int> parity(ex.n, 0);
    pat.f.push_back(f);
    pat.z_parity.push_back(parity);

    for (size_t step = 0; step < directions.size(); ++step) {
        const int k = directions[step];
        const auto& c = pat.cpattern[step].c;
        const auto& b = pat.cpattern[step].b;
        const auto dk = ex.d[k];

        // split the P_k argument prod_j y_j^{c_jk} F_j^{b_jk} into
        // numerator/denominator parts with nonnegative exponents
        SparsePoly num = one, den = one;
        for (int j = 0; j < ex.n; ++j) {
            const auto cjk = c(j, k);
            if (cjk > 0)
                num = num * SparsePoly::variable(nv, pat.vars.y_var(j),
                                                 static_cast<std::int32_t>(cjk));
            else if (cjk < 0)
                den = den * SparsePoly::variable(nv, pat.vars.y_var(j),
                                                 static_cast<std::int32_t>(-cjk));
            const auto bjk = b(j, k);
            if (bjk > 0) num = num * f[j].pow(bjk);
            else if (bjk < 0) den = den * f[j].pow(-bjk);
        }

        // den^{d_k} * P_k(num/den) = den^{d_k} + sum_s z_{k,s}[t] num^s den^{d_k-s} + num^{d_k}
        SparsePoly g = den.pow(dk) + num.pow(dk);
        for (std::int64_t s = 1; s <= dk - 1; ++s) {
            const std::int64_t slot = parity[k] % 2 == 0 ? s : dk - s;
            const SparsePoly zv = SparsePoly::variable(nv, pat.vars.z_var(k, slot));
            g += zv * num.pow(s) * den.pow(dk - s);
        }

        f[k] = poly_exact_div(g, f[k]);
        parity[k] ^= 1;
        pat.f.push_back(f);
        pat.z_parity.push_back(parity);
    }
    return pat;
}

namespace {

std::vector<double> make_point(const FPattern& pat, std::span<const double> y0,
                               const std::vector<std::vector<double>>& z0) {
    if (static_cast<int>(y0.size()) != pat.ex.n ||
        static_cast<int>(z0.size()) != pat.ex.n)
        throw std::invalid_argument("evaluation point does not match exchange data");
    std::vector<double> vals(pat.vars.total, 0.0);
    for (int i = 0; i < pat.ex.n; ++i) vals[pat.vars.y_var(i)] = y0[i];
    for (int i = 0; i < pat.ex.n; ++i) {
        if (static_cast<std::int64_t>(z0[i].size()) != pat.ex.d[i] - 1)
            throw std::invalid_argument("z block does not match mutation degrees");
        for (std::int64_t s = 1; s <= pat.ex.d[i] - 1; ++s)
            vals[pat.vars.z_var(i, s)] = z0[i][s - 1];
    }
    return vals;
}

} // namespace

double evaluate_f(const FPattern& pat, int t, int i, std::span<const double> y0,
                  const std::vector<std::vector<double>>& z0) {
    const auto vals = make_point(pat, y0, z0);
    return pat.f.at(t).at(i).evaluate(vals);
}

double separation_evaluate(const FPattern& pat, int t, int j, std::span<const double> y0,
                           const std::vector<std::vector<double>>& z0) {
    const auto vals = make_point(pat, y0, z0);
    const auto& c = pat.cpattern.at(t).c;
    const auto& b = pat.cpattern.at(t).b;
    double out = 1.0;
    for (int i = 0; i < pat.ex.n; ++i) {
        out *= std::pow(y0[i], static_cast<double>(c(i, j)));
        const double fv = pat.f[t][i].evaluate(vals);
        if (!(fv > 0.0))
            throw std::range_error("F-polynomial evaluated to a nonpositive value");
        out *= std::pow(fv, static_cast<double>(b(i, j)));
    }
    if (!std::isfinite(out))
        throw std::range_error("separation formula overflowed");
    return out;
}

} // namespace gca
