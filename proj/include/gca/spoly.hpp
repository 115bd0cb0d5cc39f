#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gca/exchange.hpp"

namespace gca {

/// Variable layout for polynomials in {y_1..y_n} u {z_{i,s}}: y_i has id
/// i, z_{i,s} has id n + offset(i) + (s-1). The y block comes first, which
/// makes the monomial order below "y before z".
struct VarTable {
    int n = 0;
    std::vector<std::int64_t> d;
    std::vector<int> z_offset; // per i, start of its z ids relative to n
    int total = 0;

    VarTable() = default;
    explicit VarTable(const ExchangeData& ex);

    int y_var(int i) const { return i; }
    int z_var(int i, std::int64_t s) const { return n + z_offset[i] + static_cast<int>(s) - 1; }
    std::string name(int var) const;
};

using Monomial = std::vector<std::int32_t>;

/// Graded lexicographic, higher first: larger total degree wins, ties broken
/// lexicographically with earlier variables (y first) more significant.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact int64 coefficients. Zero
/// coefficients are never stored; all coefficient arithmetic is
/// overflow-checked.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    static SparsePoly constant(int nvars, std::int64_t c);
    static SparsePoly variable(int nvars, int var, std::int32_t exponent = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly pow(std::int64_t e) const;

    bool operator==(const SparsePoly& o) const = default;

    /// Numeric evaluation with compensated (Neumaier) summation over terms.
    double evaluate(std::span<const double> values) const;

    /// The coefficient of the y-free part as a polynomial: terms whose
    /// y-exponents all vanish. Restricted variable range [0, ny).
    SparsePoly y_constant_part(int ny) const;

    bool all_coefficients_nonnegative() const;

    const std::map<Monomial, std::int64_t, GradedLexGreater>& terms() const { return terms_; }

    void add_term(Monomial m, std::int64_t c);

    /// Leading-first canonical rendering.
    std::string to_string(const VarTable& vars) const;

private:
    int nvars_ = 0;
    std::map<Monomial, std::int64_t, GradedLexGreater> terms_;
};

/// Exact quotient a / b; throws std::domain_error if b is zero or the
/// division leaves a remainder.
SparsePoly poly_exact_div(const SparsePoly& a, const SparsePoly& b);

} // namespace gca
