#pragma once

// Independent reference implementations used only by the tests. Each one
// deliberately avoids the code path it checks: the tropical evaluator plays
// against the C-matrix recursion, adaptive Simpson against Gauss-Kronrod,
// big-rational evaluation against double evaluation, and the exhaustive
// rank-2 search against the filtered period finder.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "gca/exchange.hpp"

namespace oracles {

// random skew-symmetrizable exchange data: with unit_r the matrix is skew
// symmetric with entries in [-max_entry, max_entry]; otherwise entries are
// b_ij = r_j m_ij, b_ji = -r_i m_ij so that diag(r) B is skew-symmetric
inline gca::ExchangeData random_exchange(std::mt19937_64& rng, int n, int max_entry = 3,
                                         int max_degree = 3, bool unit_r = true) {
    std::uniform_int_distribution<int> ent(-max_entry, max_entry);
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::uniform_int_distribution<int> rdist(1, 3);
    gca::IntMatrix b(n);
    std::vector<std::int64_t> r(n, 1), d(n);
    if (!unit_r)
        for (auto& v : r) v = rdist(rng);
    for (int i = 0; i < n; ++i) {
        d[i] = deg(rng);
        for (int j = i + 1; j < n; ++j) {
            const int m = ent(rng);
            b(i, j) = unit_r ? m : r[j] * m;
            b(j, i) = unit_r ? -m : -r[i] * m;
        }
    }
    return gca::ExchangeData(std::move(b), std::move(r), std::move(d));
}

// ---------------------------------------------------------------- quadrature

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                                   double m, double fm, double b, double fb, double whole,
                                   double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, fa, lm, flm, m, fm, left, tol / 2, depth - 1) +
           adaptive_simpson_rec(f, m, fm, rm, frm, b, fb, right, tol / 2, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) { std::swap(a, b); sign = -1.0; }
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return sign * adaptive_simpson_rec(f, a, fa, m, fm, b, fb, whole, tol, 48);
}

// ------------------------------------------------------- tropical evaluation

// Laurent monomials over the initial y- and z-variables; addition is the
// componentwise minimum of exponent vectors.
struct TropMonomial {
    std::vector<std::int64_t> e;

    TropMonomial() = default;
    explicit TropMonomial(int nvars) : e(nvars, 0) {}

    TropMonomial operator*(const TropMonomial& o) const {
        TropMonomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    TropMonomial inverse() const {
        TropMonomial r = *this;
        for (auto& v : r.e) v = -v;
        return r;
    }
    TropMonomial pow(std::int64_t k) const {
        TropMonomial r = *this;
        for (auto& v : r.e) v *= k;
        return r;
    }
    TropMonomial oplus(const TropMonomial& o) const {
        TropMonomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = std::min(r.e[i], o.e[i]);
        return r;
    }
};

struct TropicalPattern {
    // y[j] as a monomial in the initial variables; zvar[i][s-1] is the id of
    // the initial z-variable currently sitting in slot (i, s)
    std::vector<TropMonomial> y;
    std::vector<std::vector<int>> zvar;
    gca::IntMatrix b;
};

inline TropicalPattern tropical_root(const gca::ExchangeData& ex) {
    TropicalPattern p;
    int nz = 0;
    std::vector<int> zoff(ex.n, 0);
    for (int i = 0; i < ex.n; ++i) {
        zoff[i] = nz;
        nz += static_cast<int>(ex.d[i] - 1);
    }
    const int nvars = ex.n + nz;
    p.y.assign(ex.n, TropMonomial(nvars));
    for (int i = 0; i < ex.n; ++i) p.y[i].e[i] = 1;
    p.zvar.resize(ex.n);
    for (int i = 0; i < ex.n; ++i) {
        p.zvar[i].resize(ex.d[i] - 1);
        for (int s = 0; s < static_cast<int>(ex.d[i] - 1); ++s)
            p.zvar[i][s] = ex.n + zoff[i] + s;
    }
    p.b = ex.b;
    return p;
}

inline TropicalPattern tropical_mutate(const TropicalPattern& p, const gca::ExchangeData& ex,
                                       int k) {
    const int n = static_cast<int>(p.y.size());
    const int nvars = static_cast<int>(p.y[k].e.size());
    // trop(P_k(y_k)) = min(0, z_{k,s} + s y_k, d_k y_k)
    TropMonomial pk(nvars);
    for (std::int64_t s = 1; s <= ex.d[k] - 1; ++s) {
        TropMonomial term = p.y[k].pow(s);
        term.e[p.zvar[k][s - 1]] += 1;
        pk = pk.oplus(term);
    }
    pk = pk.oplus(p.y[k].pow(ex.d[k]));

    TropicalPattern out = p;
    out.y[k] = p.y[k].inverse();
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        const auto e1 = gca::pos_part(ex.d[k] * p.b(k, i));
        out.y[i] = p.y[i] * p.y[k].pow(e1) * pk.pow(-p.b(k, i));
    }
    for (std::int64_t s = 1; s <= ex.d[k] - 1; ++s)
        out.zvar[k][s - 1] = p.zvar[k][ex.d[k] - s - 1];
    gca::ExchangeData tmp = ex;
    tmp.b = p.b;
    out.b = gca::mutate_matrix(tmp, k).b;
    return out;
}

// the c-vector of y_j is the y-part of its exponent vector
inline std::vector<std::int64_t> tropical_c_vector(const TropicalPattern& p, int j, int n) {
    return {p.y[j].e.begin(), p.y[j].e.begin() + n};
}

// ------------------------------------------------------------- big rationals

// magnitude-only big integer, base 2^32; just enough for evaluating integer
// polynomials at small rational points
struct BigNat {
    std::vector<std::uint32_t> limb; // little-endian, no trailing zeros

    BigNat() = default;
    explicit BigNat(std::uint64_t v) {
        while (v) {
            limb.push_back(static_cast<std::uint32_t>(v));
            v >>= 32;
        }
    }
    bool is_zero() const { return limb.empty(); }

    friend BigNat operator+(const BigNat& a, const BigNat& b) {
        BigNat r;
        std::uint64_t carry = 0;
        const size_t nn = std::max(a.limb.size(), b.limb.size());
        for (size_t i = 0; i < nn || carry; ++i) {
            std::uint64_t s = carry;
            if (i < a.limb.size()) s += a.limb[i];
            if (i < b.limb.size()) s += b.limb[i];
            r.limb.push_back(static_cast<std::uint32_t>(s));
            carry = s >> 32;
        }
        return r;
    }
    friend BigNat operator*(const BigNat& a, const BigNat& b) {
        if (a.is_zero() || b.is_zero()) return BigNat();
        BigNat r;
        r.limb.assign(a.limb.size() + b.limb.size(), 0);
        for (size_t i = 0; i < a.limb.size(); ++i) {
            std::uint64_t carry = 0;
            for (size_t j = 0; j < b.limb.size(); ++j) {
                std::uint64_t cur = r.limb[i + j] +
                                    static_cast<std::uint64_t>(a.limb[i]) * b.limb[j] + carry;
                r.limb[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t j = i + b.limb.size();
            while (carry) {
                std::uint64_t cur = r.limb[j] + carry;
                r.limb[j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++j;
            }
        }
        while (!r.limb.empty() && r.limb.back() == 0) r.limb.pop_back();
        return r;
    }
    BigNat pow(std::int64_t e) const {
        BigNat r(1);
        BigNat base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }
    long double to_long_double() const {
        long double acc = 0.0L;
        for (size_t i = limb.size(); i-- > 0;) acc = acc * 4294967296.0L + limb[i];
        return acc;
    }
};

struct BigInt {
    int sign = 0; // -1, 0, +1
    BigNat mag;

    BigInt() = default;
    BigInt(std::int64_t v) : sign(v > 0 ? 1 : v < 0 ? -1 : 0), mag(static_cast<std::uint64_t>(v < 0 ? -v : v)) {}
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        r.sign = a.sign * b.sign;
        if (r.sign) r.mag = a.mag * b.mag;
        return r;
    }
    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        if (a.sign == b.sign) {
            BigInt r;
            r.sign = a.sign;
            r.mag = a.mag + b.mag;
            return r;
        }
        throw std::logic_error("mixed-sign addition not needed by this oracle");
    }
    long double to_long_double() const { return sign * mag.to_long_double(); }
};

// -------------------------------------------------------- exhaustive search

struct BruteforcePeriod {
    std::vector<int> word;
    gca::Permutation sigma;
};

// every (reduced word, sigma) pair up to max_len that returns the seed
// numerically at `draws` random starting points; no tropical filters at all,
// so this is an oracle for the filtered period finder
inline std::vector<BruteforcePeriod> bruteforce_periods(
    const gca::ExchangeData& ex, int max_len, int draws, std::uint64_t rng_seed,
    const std::function<gca::Seed(std::mt19937_64&)>& make_seed, double tol = 1e-9) {
    std::mt19937_64 rng(rng_seed);
    std::vector<gca::Seed> probes;
    for (int t = 0; t < draws; ++t) probes.push_back(make_seed(rng));

    std::vector<gca::Permutation> sigmas;
    std::vector<int> perm(ex.n);
    for (int i = 0; i < ex.n; ++i) perm[i] = i;
    do sigmas.emplace_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    const auto returns_under = [&](const std::vector<gca::Seed>& state,
                                   const gca::Permutation& sg) {
        for (int t = 0; t < draws; ++t) {
            const auto& s0 = probes[t];
            const auto& s1 = state[t];
            for (int i = 0; i < ex.n; ++i)
                for (int j = 0; j < ex.n; ++j)
                    if (s1.ex.b(sg(i), sg(j)) != s0.ex.b(i, j)) return false;
            for (int i = 0; i < ex.n; ++i) {
                if (gca::relative_deviation(s1.y[sg(i)], s0.y[i]) > tol) return false;
                for (size_t s = 0; s < s0.z[i].size(); ++s)
                    if (gca::relative_deviation(s1.z[sg(i)][s], s0.z[i][s]) > tol) return false;
            }
        }
        return true;
    };

    std::vector<BruteforcePeriod> found;
    std::vector<int> word;
    const auto dfs = [&](auto&& self, const std::vector<gca::Seed>& state) -> void {
        if (static_cast<int>(word.size()) == max_len) return;
        for (int k = 0; k < ex.n; ++k) {
            if (!word.empty() && word.back() == k) continue;
            std::vector<gca::Seed> next;
            next.reserve(state.size());
            for (const auto& s : state) next.push_back(gca::mutate_seed(s, k));
            word.push_back(k);
            for (const auto& sg : sigmas)
                if (returns_under(next, sg)) found.push_back({word, sg});
            self(self, next);
            word.pop_back();
        }
    };
    dfs(dfs, probes);
    return found;
}

} // namespace oracles
