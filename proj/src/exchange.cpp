#include "gca/exchange.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gca {

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.size(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

ExchangeData::ExchangeData(IntMatrix b_, std::vector<std::int64_t> r_,
                           std::vector<std::int64_t> d_)
    : n(b_.size()), b(std::move(b_)), r(std::move(r_)), d(std::move(d_)) {
    validate();
}

void ExchangeData::validate() const {
    if (n < 1) throw std::invalid_argument("exchange data: rank must be positive");
    if (n > kMaxRank) throw std::invalid_argument("exchange data: rank exceeds engine cap");
    if (b.size() != n || static_cast<int>(r.size()) != n || static_cast<int>(d.size()) != n)
        throw std::invalid_argument("exchange data: inconsistent dimensions");
    for (int i = 0; i < n; ++i) {
        if (r[i] < 1) throw std::invalid_argument("exchange data: skew-symmetrizer entries must be >= 1");
        if (d[i] < 1) throw std::invalid_argument("exchange data: mutation degrees must be >= 1");
    }
    // r_i b_{ij} = -r_j b_{ji}, entrywise
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (checked_mul(r[i], b(i, j)) != -checked_mul(r[j], b(j, i)))
                throw std::invalid_argument("exchange data: R*B is not skew-symmetric");
}

bool ExchangeData::has_z_block() const {
    return std::any_of(d.begin(), d.end(), [](std::int64_t di) { return di > 1; });
}

bool ExchangeData::is_full_rank() const {
    // fraction-free Gaussian elimination on a copy
    std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = static_cast<long double>(b(i, j));
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        long double best = 0;
        for (int row = col; row < n; ++row)
            if (std::abs(m[row][col]) > best) { best = std::abs(m[row][col]); piv = row; }
        if (piv < 0 || best == 0) return false;
        std::swap(m[piv], m[col]);
        for (int row = col + 1; row < n; ++row) {
            long double f = m[row][col] / m[col][col];
            for (int j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return true;
}

Seed::Seed(ExchangeData ex_, std::vector<double> y_, std::vector<std::vector<double>> z_)
    : ex(std::move(ex_)), y(std::move(y_)), z(std::move(z_)) {
    validate();
}

void Seed::validate() const {
    ex.validate();
    if (static_cast<int>(y.size()) != ex.n) throw std::invalid_argument("seed: y has wrong length");
    if (static_cast<int>(z.size()) != ex.n) throw std::invalid_argument("seed: z has wrong length");
    for (int i = 0; i < ex.n; ++i) {
        if (!(y[i] > 0.0) || !std::isfinite(y[i]))
            throw std::invalid_argument("seed: y-variables must be positive and finite");
        if (static_cast<std::int64_t>(z[i].size()) != ex.d[i] - 1)
            throw std::invalid_argument("seed: z block does not match mutation degrees");
        for (double v : z[i])
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument("seed: z-variables must be nonnegative and finite");
    }
}

double Seed::exchange_poly(int k, double alpha) const {
    // Horner on (1, z_{k,1}, ..., z_{k,d_k-1}, 1)
    const auto dk = ex.d[k];
    double v = 1.0;
    for (std::int64_t s = dk - 1; s >= 1; --s) v = v * alpha + z[k][s - 1];
    return v * alpha + 1.0;
}

std::vector<double> Seed::exchange_poly_coeffs(int k) const {
    std::vector<double> c;
    c.reserve(ex.d[k] + 1);
    c.push_back(1.0);
    for (double v : z[k]) c.push_back(v);
    c.push_back(1.0);
    return c;
}

Permutation::Permutation(std::vector<int> im) : images(std::move(im)) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("permutation: images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    return Permutation(std::move(im));
}

IntMatrix Permutation::matrix() const {
    IntMatrix m(size());
    for (int i = 0; i < size(); ++i) m(i, images[i]) = 1;
    return m;
}

namespace {

void check_direction(int n, int k) {
    if (k < 0 || k >= n)
        throw std::invalid_argument("mutation direction " + std::to_string(k + 1) +
                                    " out of range 1.." + std::to_string(n));
}

void check_sign(int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("mutation sign must be +1 or -1");
}

} // namespace

ExchangeData mutate_matrix(const ExchangeData& ex, int k, int eps) {
    check_direction(ex.n, k);
    check_sign(eps);
    ExchangeData out = ex;
    const auto dk = ex.d[k];
    for (int i = 0; i < ex.n; ++i) {
        for (int j = 0; j < ex.n; ++j) {
            if (i == k || j == k) {
                out.b(i, j) = -ex.b(i, j);
            } else {
                const auto t1 = checked_mul(pos_part(checked_mul(-eps, checked_mul(ex.b(i, k), dk))), ex.b(k, j));
                const auto t2 = checked_mul(ex.b(i, k), pos_part(checked_mul(eps, checked_mul(dk, ex.b(k, j)))));
                out.b(i, j) = checked_add(ex.b(i, j), checked_add(t1, t2));
            }
        }
    }
    return out;
}

Seed mutate_seed(const Seed& s, int k, int eps) {
    check_direction(s.ex.n, k);
    check_sign(eps);
    const auto dk = s.ex.d[k];

    Seed out = s;
    out.ex = mutate_matrix(s.ex, k, eps);

    // P_k^o(alpha) = P_k(alpha^eps) alpha^{((1-eps)/2) d_k}; for eps = -1
    // this is P_k with reversed coefficients.
    const double yk_e = eps == 1 ? s.y[k] : 1.0 / s.y[k];
    double pcirc = 0.0;
    if (eps == 1) {
        pcirc = s.exchange_poly(k, s.y[k]);
    } else {
        // reversed coefficients: the alpha^i coefficient is z_{k,d_k-i}
        double v = 1.0;
        for (std::int64_t i = dk - 1; i >= 1; --i) v = v * yk_e + s.z[k][dk - i - 1];
        pcirc = v * yk_e + 1.0;
    }

    out.y[k] = 1.0 / s.y[k];
    for (int i = 0; i < s.ex.n; ++i) {
        if (i == k) continue;
        const auto e1 = pos_part(checked_mul(eps, checked_mul(dk, s.ex.b(k, i))));
        const auto e2 = -s.ex.b(k, i);
        out.y[i] = s.y[i] * std::pow(s.y[k], static_cast<double>(e1)) *
                   std::pow(pcirc, static_cast<double>(e2));
        if (!std::isfinite(out.y[i]) || out.y[i] <= 0.0)
            throw std::range_error("seed mutation produced a non-finite y-variable");
    }
    // z_{k,s}' = z_{k,d_k-s}; all other z-variables are unchanged.
    for (std::int64_t sdx = 1; sdx <= dk - 1; ++sdx) out.z[k][sdx - 1] = s.z[k][dk - sdx - 1];
    return out;
}

Seed apply_sequence(const Seed& s, std::span<const int> directions, std::span<const int> eps_seq) {
    if (directions.size() > static_cast<size_t>(kMaxSequenceLength))
        throw std::invalid_argument("mutation sequence exceeds engine cap");
    if (!eps_seq.empty() && eps_seq.size() != directions.size())
        throw std::invalid_argument("sign sequence length does not match directions");
    Seed cur = s;
    for (size_t i = 0; i < directions.size(); ++i)
        cur = mutate_seed(cur, directions[i], eps_seq.empty() ? +1 : eps_seq[i]);
    return cur;
}

Seed right_companion(const Seed& s) {
    const int n = s.ex.n;
    IntMatrix bd(n);
    std::vector<std::int64_t> rr(n), dd(n, 1);
    for (int i = 0; i < n; ++i) {
        rr[i] = checked_mul(s.ex.r[i], s.ex.d[i]);
        for (int j = 0; j < n; ++j) bd(i, j) = checked_mul(s.ex.b(i, j), s.ex.d[j]);
    }
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) y[i] = std::pow(s.y[i], static_cast<double>(s.ex.d[i]));
    return Seed(ExchangeData(std::move(bd), std::move(rr), std::move(dd)), std::move(y),
                std::vector<std::vector<double>>(n));
}

double relative_deviation(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-30});
    return std::abs(a - b) / scale;
}

PeriodicityReport check_sigma_periodicity(const Seed& start, const MutationSequence& seq,
                                          std::span<const int> eps_seq, double tol) {
    if (seq.sigma.size() != start.ex.n)
        throw std::invalid_argument("periodicity check: permutation size mismatch");
    const Seed end = apply_sequence(start, seq.directions, eps_seq);
    const auto& sg = seq.sigma;

    PeriodicityReport rep;
    rep.tolerance = tol;
    rep.b_matches = true;
    for (int i = 0; i < start.ex.n; ++i)
        for (int j = 0; j < start.ex.n; ++j)
            if (end.ex.b(sg(i), sg(j)) != start.ex.b(i, j)) rep.b_matches = false;
    for (int i = 0; i < start.ex.n; ++i) {
        rep.y_deviation = std::max(rep.y_deviation, relative_deviation(end.y[sg(i)], start.y[i]));
        for (size_t sdx = 0; sdx < start.z[i].size(); ++sdx)
            rep.z_deviation =
                std::max(rep.z_deviation, relative_deviation(end.z[sg(i)][sdx], start.z[i][sdx]));
    }
    rep.periodic = rep.b_matches && rep.y_deviation <= tol && rep.z_deviation <= tol;
    return rep;
}

bool validate_z_parity(const MutationSequence& seq, const ExchangeData& ex) {
    for (int i = 0; i < ex.n; ++i) {
        if (ex.d[i] <= 1) continue;
        if (seq.sigma(i) != i) return false;
        if (ex.d[i] >= 3) {
            // the index swap s <-> d_i - s is nontrivial, so only an even
            // number of mutations at i can return the z-block
            const auto count = std::count(seq.directions.begin(), seq.directions.end(), i);
            if (count % 2 != 0) return false;
        }
    }
    return true;
}

} // namespace gca
