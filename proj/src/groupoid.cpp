#include "gca/groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gca {

GroupoidSeed::GroupoidSeed(Seed base_, std::vector<double> q_,
                           std::vector<std::vector<double>> a_)
    : base(std::move(base_)), q(std::move(q_)), a(std::move(a_)) {
    validate();
}

void GroupoidSeed::validate() const {
    base.validate();
    if (static_cast<int>(q.size()) != base.ex.n)
        throw std::invalid_argument("groupoid seed: q has wrong length");
    if (static_cast<int>(a.size()) != base.ex.n)
        throw std::invalid_argument("groupoid seed: a has wrong length");
    for (int i = 0; i < base.ex.n; ++i)
        if (a[i].size() != base.z[i].size())
            throw std::invalid_argument("groupoid seed: a index set must match z");
}

std::vector<double> beta_values(const Seed& base, std::span<const double> q) {
    const int n = base.ex.n;
    if (static_cast<int>(q.size()) != n)
        throw std::invalid_argument("beta action: q has wrong length");
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) {
        double w = 0.0;
        for (int i = 0; i < n; ++i)
            w += static_cast<double>(base.ex.r[i] * base.ex.b(i, j)) * base.y[i] * q[i];
        out[j] = base.y[j] * std::exp(w);
        if (!std::isfinite(out[j]) || out[j] <= 0.0)
            throw std::range_error("beta action overflowed");
    }
    return out;
}

Seed beta_action(const GroupoidSeed& g) {
    Seed out = g.base;
    out.y = beta_values(g.base, g.q);
    return out;
}

namespace {

double eval_poly_coeffs(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

} // namespace

GroupoidSeed mutate_groupoid_seed(const GroupoidSeed& g, int k, int eps,
                                  const QuadratureConfig& quad) {
    const Seed& s = g.base;
    const int n = s.ex.n;
    if (k < 0 || k >= n) throw std::invalid_argument("mutation direction out of range");
    if (eps != 1 && eps != -1) throw std::invalid_argument("mutation sign must be +1 or -1");
    const auto dk = s.ex.d[k];
    const double rk = static_cast<double>(s.ex.r[k]);
    const double yk = s.y[k];

    // the action evaluated before mutation
    const std::vector<double> beta = beta_values(s, g.q);
    const double beta_k = beta[k];

    // P_k^o as an explicit coefficient vector: P_k for eps = +1, reversed otherwise
    std::vector<double> pc = s.exchange_poly_coeffs(k);
    if (eps == -1) std::reverse(pc.begin(), pc.end());
    const double yk_e = eps == 1 ? yk : 1.0 / yk;
    const double beta_e = eps == 1 ? beta_k : 1.0 / beta_k;
    const double pc_at_y = eval_poly_coeffs(pc, yk_e);
    const double pc_at_beta = eval_poly_coeffs(pc, beta_e);

    GroupoidSeed out;
    out.base = mutate_seed(s, k, eps);
    out.q = g.q;
    out.a = g.a;

    double qk = -g.q[k] * yk * yk;
    for (int i = 0; i < n; ++i)
        qk += static_cast<double>(pos_part(eps * dk * s.ex.b(k, i))) * g.q[i] * s.y[i] * yk;
    qk += yk / rk * std::log(pc_at_beta / pc_at_y);
    out.q[k] = qk;
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        const auto e1 = pos_part(checked_mul(eps, checked_mul(dk, s.ex.b(k, i))));
        out.q[i] = g.q[i] * std::pow(yk, -static_cast<double>(e1)) *
                   std::pow(pc_at_y, static_cast<double>(s.ex.b(k, i)));
    }
    for (double v : out.q)
        if (!std::isfinite(v)) throw std::range_error("groupoid mutation overflowed q");

    if (dk > 1) {
        const PolyP pk(s.exchange_poly_coeffs(k));
        for (std::int64_t sdx = 1; sdx <= dk - 1; ++sdx) {
            const double integral =
                kernel_integral(pk, static_cast<int>(dk - sdx), eps, yk_e, beta_e, quad);
            out.a[k][sdx - 1] = g.a[k][dk - sdx - 1] + static_cast<double>(eps) / rk * integral;
        }
    }
    return out;
}

GroupoidSeed apply_groupoid_sequence(const GroupoidSeed& g, std::span<const int> directions,
                                     std::span<const int> eps_seq,
                                     const QuadratureConfig& quad) {
    if (eps_seq.size() != directions.size())
        throw std::invalid_argument("sign sequence length does not match directions");
    GroupoidSeed cur = g;
    for (size_t i = 0; i < directions.size(); ++i)
        cur = mutate_groupoid_seed(cur, directions[i], eps_seq[i], quad);
    return cur;
}

std::vector<double> solve_q_for_uniform_shift(const Seed& s, double lambda) {
    const int n = s.ex.n;
    if (!(lambda > 0.0)) throw std::invalid_argument("shift must be positive");
    if (!s.ex.is_full_rank())
        throw std::domain_error("uniform shift requires a full-rank exchange matrix");
    // row j of the system: sum_i r_i b_ij y_i q_i = -lambda
    std::vector<std::vector<double>> m(n, std::vector<double>(n + 1));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i)
            m[j][i] = static_cast<double>(s.ex.r[i] * s.ex.b(i, j)) * s.y[i];
        m[j][n] = -lambda;
    }
    // Gaussian elimination with partial pivoting
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
        if (std::abs(m[piv][col]) < 1e-14)
            throw std::domain_error("uniform shift requires a full-rank exchange matrix");
        std::swap(m[piv], m[col]);
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const double f = m[row][col] / m[col][col];
            for (int j = col; j <= n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) q[i] = m[i][n] / m[i][i];
    return q;
}

CommuteReport verify_action_commutes(const GroupoidSeed& g, int k, int eps, double tol,
                                     const QuadratureConfig& quad) {
    const GroupoidSeed mutated = mutate_groupoid_seed(g, k, eps, quad);
    const std::vector<double> act_after = beta_values(mutated.base, mutated.q);

    const Seed acted = beta_action(g);
    const Seed mutate_after = mutate_seed(acted, k, eps);

    CommuteReport rep;
    rep.tolerance = tol;
    for (int j = 0; j < g.base.ex.n; ++j)
        rep.max_relative_deviation =
            std::max(rep.max_relative_deviation, relative_deviation(act_after[j], mutate_after.y[j]));
    rep.pass = rep.max_relative_deviation <= tol;
    return rep;
}

} // namespace gca
