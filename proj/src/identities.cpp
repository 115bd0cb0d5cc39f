#include "gca/identities.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace gca {

PeriodicityInstance make_instance(Seed start, MutationSequence seq) {
    PeriodicityInstance inst;
    inst.cpattern = compute_c_pattern(start.ex, seq.directions);
    inst.eps.resize(seq.directions.size());
    for (size_t l = 0; l < seq.directions.size(); ++l)
        inst.eps[l] = inst.cpattern[l].eps[seq.directions[l]];
    inst.start = std::move(start);
    inst.seq = std::move(seq);
    return inst;
}

std::vector<int> s_circ_sequence(std::span<const int> directions, int j, int s, std::int64_t dj) {
    if (s < 1 || s > dj - 1) throw std::invalid_argument("s out of range 1..d_j-1");
    std::vector<int> out;
    int prior = 0;
    for (int k : directions) {
        if (k != j) continue;
        out.push_back(prior % 2 == 0 ? s : static_cast<int>(dj) - s);
        ++prior;
    }
    return out;
}

namespace {

double dilog_value(const PolyP& p, double x) {
    // degree one is the classical function; the series route is both faster
    // and more accurate than quadrature there
    if (p.degree() == 1) return rogers_dilog(x);
    return rogers_dilog_higher(p, x);
}

std::string subscript(int j, int s) {
    return "(j=" + std::to_string(j + 1) + ",s=" + std::to_string(s) + ")";
}

VerificationReport finish(VerificationReport rep, double tol) {
    rep.tolerance = tol;
    rep.pass = rep.deviation <= tol;
    return rep;
}

} // namespace

double dilog_sum_eps(const PeriodicityInstance& inst, const Seed& start) {
    Seed cur = start;
    double sum = 0.0;
    for (int l = 0; l < inst.length(); ++l) {
        const int k = inst.seq.directions[l];
        const int e = inst.eps[l];
        const PolyP p(cur.exchange_poly_coeffs(k));
        const double arg = e == 1 ? cur.y[k] : 1.0 / cur.y[k];
        sum += e / static_cast<double>(cur.ex.r[k]) * dilog_value(pcirc_transform(p, e), arg);
        cur = mutate_seed(cur, k, e);
    }
    return sum;
}

double dilog_sum_no_eps(const PeriodicityInstance& inst, const Seed& start) {
    Seed cur = start;
    double sum = 0.0;
    for (int l = 0; l < inst.length(); ++l) {
        const int k = inst.seq.directions[l];
        const PolyP p(cur.exchange_poly_coeffs(k));
        sum += dilog_value(p, cur.y[k]) / static_cast<double>(cur.ex.r[k]);
        cur = mutate_seed(cur, k, inst.eps[l]);
    }
    return sum;
}

VerificationReport verify_dilog_identity_eps(const PeriodicityInstance& inst, double tol) {
    VerificationReport rep;
    rep.name = "dilog-identity-eps";
    rep.lhs = dilog_sum_eps(inst, inst.start);
    rep.rhs = 0.0;
    rep.deviation = std::abs(rep.lhs);
    return finish(std::move(rep), tol);
}

VerificationReport verify_dilog_identity_no_eps(const PeriodicityInstance& inst, double tol,
                                                int y_draws, std::uint64_t rng_seed) {
    VerificationReport rep;
    rep.name = "dilog-identity-no-eps";
    rep.lhs = dilog_sum_no_eps(inst, inst.start);

    // right side: only the steps with negative tropical sign contribute
    Seed cur = inst.start;
    double rhs = 0.0;
    for (int l = 0; l < inst.length(); ++l) {
        const int k = inst.seq.directions[l];
        if (inst.eps[l] == -1) {
            const PolyP p(cur.exchange_poly_coeffs(k));
            const double inf_value =
                p.degree() == 1 ? rogers_dilog(1.0) * 2.0 : rogers_dilog_infinity(p);
            rhs += inf_value / static_cast<double>(cur.ex.r[k]);
        }
        cur = mutate_seed(cur, k, inst.eps[l]);
    }
    rep.rhs = rhs;

    double lo = rep.lhs, hi = rep.lhs;
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> dist(0.2, 4.0);
    for (int t = 0; t < y_draws; ++t) {
        Seed draw = inst.start;
        for (double& v : draw.y) v = dist(rng);
        const double val = dilog_sum_no_eps(inst, draw);
        lo = std::min(lo, val);
        hi = std::max(hi, val);
    }
    const double spread = hi - lo;
    rep.deviation = std::max(std::abs(rep.lhs - rep.rhs), spread);
    std::ostringstream note;
    note << "spread over " << y_draws << " initial y draws = " << spread;
    rep.note = note.str();
    return finish(std::move(rep), tol);
}

VerificationReport verify_companion_dilog(const PeriodicityInstance& inst, double tol) {
    VerificationReport rep;
    rep.name = "companion-dilog";
    Seed cur = right_companion(inst.start);
    const auto eps = tropical_sign_sequence(cur.ex, inst.seq.directions);
    double sum = 0.0;
    for (int l = 0; l < inst.length(); ++l) {
        const int k = inst.seq.directions[l];
        const int e = eps[l];
        const double arg = e == 1 ? cur.y[k] : 1.0 / cur.y[k];
        sum += e / static_cast<double>(cur.ex.r[k]) * rogers_dilog(arg);
        cur = mutate_seed(cur, k, e);
    }
    rep.lhs = sum;
    rep.rhs = 0.0;
    rep.deviation = std::abs(sum);
    return finish(std::move(rep), tol);
}

VerificationReport verify_a_periodicity_sum(const PeriodicityInstance& inst,
                                            const GroupoidSeed& g0, int j, int s,
                                            const QuadratureConfig& quad, double tol) {
    const auto dj = inst.start.ex.d[j];
    VerificationReport rep;
    rep.name = "a-periodicity-sum" + subscript(j, s);
    if (dj <= 1) {
        rep.note = "vacuous: no z-variables at this index";
        return finish(std::move(rep), tol);
    }
    const auto scirc = s_circ_sequence(inst.seq.directions, j, s, dj);
    GroupoidSeed cur = g0;
    double sum = 0.0;
    size_t occ = 0;
    for (int l = 0; l < inst.length(); ++l) {
        const int k = inst.seq.directions[l];
        const int e = inst.eps[l];
        if (k == j) {
            const double beta_j = beta_values(cur.base, cur.q)[j];
            const double yj = cur.base.y[j];
            const PolyP p(cur.base.exchange_poly_coeffs(j));
            const double lo = e == 1 ? yj : 1.0 / yj;
            const double hi = e == 1 ? beta_j : 1.0 / beta_j;
            sum += e / static_cast<double>(cur.base.ex.r[j]) *
                   kernel_integral(p, scirc[occ], e, lo, hi, quad);
            ++occ;
        }
        cur = mutate_groupoid_seed(cur, k, e, quad);
    }
    rep.lhs = sum;
    rep.rhs = 0.0;
    rep.deviation = std::abs(sum);
    return finish(std::move(rep), tol);
}

VerificationReport verify_analogues_sum(const PeriodicityInstance& inst, int j, int s,
                                        const QuadratureConfig& quad, double tol) {
    const auto dj = inst.start.ex.d[j];
    VerificationReport rep;
    rep.name = "analogues-sum" + subscript(j, s);
    if (dj <= 1) {
        rep.note = "vacuous: no z-variables at this index";
        return finish(std::move(rep), tol);
    }
    if (!inst.start.ex.is_full_rank())
        rep.note = "warning: exchange matrix is not full rank; running anyway";
    const auto scirc = s_circ_sequence(inst.seq.directions, j, s, dj);
    Seed cur = inst.start;
    double sum = 0.0;
    size_t occ = 0;
    for (int l = 0; l < inst.length(); ++l) {
        const int k = inst.seq.directions[l];
        const int e = inst.eps[l];
        if (k == j) {
            const PolyP p(cur.exchange_poly_coeffs(j));
            const double hi = e == 1 ? cur.y[j] : 1.0 / cur.y[j];
            sum += e / static_cast<double>(cur.ex.r[j]) *
                   kernel_integral(p, scirc[occ], e, 0.0, hi, quad);
            ++occ;
        }
        cur = mutate_seed(cur, k, e);
    }
    rep.lhs = sum;
    rep.rhs = 0.0;
    rep.deviation = std::abs(sum);
    return finish(std::move(rep), tol);
}

namespace {

// per-step log y_{k_l}[l] and log P_l(y_{k_l}[l]) as functions of the
// initial z_{j,s}
struct BilinearTrace {
    std::vector<double> log_y;
    std::vector<double> log_p;
};

BilinearTrace bilinear_trace(const PeriodicityInstance& inst, int j, int s, double z_value) {
    Seed cur = inst.start;
    cur.z[j][s - 1] = z_value;
    cur.validate();
    BilinearTrace tr;
    for (int l = 0; l < inst.length(); ++l) {
        const int k = inst.seq.directions[l];
        tr.log_y.push_back(std::log(cur.y[k]));
        tr.log_p.push_back(std::log(cur.exchange_poly(k, cur.y[k])));
        cur = mutate_seed(cur, k, inst.eps[l]);
    }
    return tr;
}

} // namespace

VerificationReport verify_wedge_symmetry(const PeriodicityInstance& inst, int j, int s,
                                         double z_a, double z_b, double tol) {
    VerificationReport rep;
    rep.name = "wedge-symmetry" + subscript(j, s);
    if (inst.start.ex.d[j] <= 1) {
        rep.note = "vacuous: no z-variables at this index";
        return finish(std::move(rep), tol);
    }
    const auto ta = bilinear_trace(inst, j, s, z_a);
    const auto tb = bilinear_trace(inst, j, s, z_b);
    double lhs = 0.0, rhs = 0.0;
    for (int l = 0; l < inst.length(); ++l) {
        const double rk = static_cast<double>(inst.start.ex.r[inst.seq.directions[l]]);
        lhs += ta.log_y[l] * tb.log_p[l] / rk;
        rhs += tb.log_y[l] * ta.log_p[l] / rk;
    }
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.deviation = std::abs(lhs - rhs);
    return finish(std::move(rep), tol);
}

VerificationReport verify_z_derivative(const PeriodicityInstance& inst, int j, int s,
                                        double h, double tol,
                                        const QuadratureConfig& quad) {
    VerificationReport rep;
    rep.name = "z-derivative" + subscript(j, s);
    const auto dj = inst.start.ex.d[j];
    if (dj <= 1) {
        rep.note = "vacuous: no z-variables at this index";
        return finish(std::move(rep), tol);
    }
    const double z0 = inst.start.z[j][s - 1];
    if (z0 - h <= 0.0)
        throw std::invalid_argument("z-derivative check needs z_{j,s} interior to (0, inf)");

    const auto sum_at = [&](double z) {
        Seed st = inst.start;
        st.z[j][s - 1] = z;
        return dilog_sum_no_eps(inst, st);
    };
    const double fd_h = (sum_at(z0 + h) - sum_at(z0 - h)) / (2.0 * h);
    const double fd_h2 = (sum_at(z0 + h / 2) - sum_at(z0 - h / 2)) / h;
    const double richardson = (4.0 * fd_h2 - fd_h) / 3.0;
    const bool steps_agree = std::abs(fd_h2 - fd_h) <= 10.0 * tol;

    const auto scirc = s_circ_sequence(inst.seq.directions, j, s, dj);
    Seed cur = inst.start;
    double rhs = 0.0;
    size_t occ = 0;
    for (int l = 0; l < inst.length(); ++l) {
        const int k = inst.seq.directions[l];
        if (k == j) {
            if (inst.eps[l] == -1) {
                const PolyP p(cur.exchange_poly_coeffs(j));
                rhs += kernel_integral_to_infinity(p, scirc[occ], quad) /
                       static_cast<double>(cur.ex.r[j]);
            }
            ++occ;
        }
        cur = mutate_seed(cur, k, inst.eps[l]);
    }
    rep.lhs = richardson;
    rep.rhs = rhs;
    rep.deviation = std::abs(richardson - rhs);
    rep.tolerance = tol;
    rep.pass = rep.deviation <= tol && steps_agree;
    if (!steps_agree) rep.note = "finite-difference step sizes disagree; h too large";
    return rep;
}

} // namespace gca
