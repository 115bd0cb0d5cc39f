#pragma once

#include <span>
#include <vector>

#include "gca/spoly.hpp"
#include "gca/tropical.hpp"

namespace gca {

/// F-polynomials along a mutation sequence together with the C-pattern that
/// drives the recursion. f[t][i] is F_{i} at vertex t (f[0][i] = 1); the z
/// coefficients stay symbolic, so one pattern serves every specialization.
/// z_parity[t][i] counts mutations at i among the first t steps mod 2 and
/// records which initial z-variable occupies slot (i, s) at vertex t.
struct FPattern {
    ExchangeData ex;
    VarTable vars;
    std::vector<int> directions;
    std::vector<CPatternStep> cpattern;           // size M+1
    std::vector<std::vector<SparsePoly>> f;       // size M+1, each of size n
    std::vector<std::vector<int>> z_parity;       // size M+1, each of size n
};

/// Runs the recursion: at the edge in direction k only F_k changes, to
///   F_k' = F_k^{-1} (prod_j y_j^{[-c_jk d_k]_+} F_j^{[-b_jk d_k]_+})
///          P_k(prod_j y_j^{c_jk} F_j^{b_jk}),
/// assembled as an exact polynomial identity: the parenthesized prefactor
/// clears every denominator of the P_k argument, and the final quotient by
/// F_k is certified exact by poly_exact_div.
FPattern f_polynomials_along(const ExchangeData& ex, std::span<const int> directions);

/// Specializes F_{i;t} at positive y0 and nonnegative z0.
double evaluate_f(const FPattern& pat, int t, int i, std::span<const double> y0,
                  const std::vector<std::vector<double>>& z0);

/// The y-variable at vertex t reconstructed from the initial data:
///   y_j[t] = prod_i y0_i^{c_ij;t} (F_{i;t}(y0, z0))^{b_ij;t}.
/// Must agree with the directly mutated seed.
double separation_evaluate(const FPattern& pat, int t, int j, std::span<const double> y0,
                           const std::vector<std::vector<double>>& z0);

} // namespace gca
