#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gca/dilog.hpp"
#include "gca/fpoly.hpp"
#include "gca/groupoid.hpp"
#include "gca/tropical.hpp"

namespace gca {

/// A mutation periodicity prepared for verification: the sequence, its
/// tropical signs, and the (C, B) data at every vertex.
struct PeriodicityInstance {
    Seed start;
    MutationSequence seq;
    std::vector<int> eps;
    std::vector<CPatternStep> cpattern;

    int length() const { return static_cast<int>(seq.directions.size()); }
};

PeriodicityInstance make_instance(Seed start, MutationSequence seq);

struct VerificationReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

/// Per-occurrence exponent bookkeeping: over the steps with direction j, the
/// value is s when an even number of earlier steps mutated j, and d_j - s
/// when that number is odd.
std::vector<int> s_circ_sequence(std::span<const int> directions, int j, int s, std::int64_t dj);

inline constexpr double kIdentityTol = 1e-8;

/// sum over steps of (eps_l / r) L_{P_l^o}(y^{eps_l}) where P_l carries the
/// z-variables at step l; zero for a proper periodicity.
VerificationReport verify_dilog_identity_eps(const PeriodicityInstance& inst,
                                             double tol = kIdentityTol);

/// sum of (1/r) L_{P_l}(y) against sum of (1/r)((1-eps_l)/2) L_{P_l}(inf);
/// also re-evaluates the left side at random initial y and folds the spread
/// into the deviation (the value must not depend on the initial y).
VerificationReport verify_dilog_identity_no_eps(const PeriodicityInstance& inst,
                                                double tol = kIdentityTol,
                                                int y_draws = 10,
                                                std::uint64_t rng_seed = 20240001);

/// Classical dilogarithm sum along the right-companion pattern, with the
/// companion's own tropical signs and skew-symmetrizer diag(r_i d_i).
VerificationReport verify_companion_dilog(const PeriodicityInstance& inst,
                                          double tol = 1e-9);

/// sum over steps with direction j of (eps/r_j) int_{y^eps}^{beta(y)^eps} of
/// the s-circ kernel, accumulated along the groupoid chain started at g0;
/// zero for every choice of initial q.
VerificationReport verify_a_periodicity_sum(const PeriodicityInstance& inst,
                                            const GroupoidSeed& g0, int j, int s,
                                            const QuadratureConfig& quad = {},
                                            double tol = kIdentityTol);

/// Same kernel integrated from 0 to y^eps; needs no q-variables. Requires a
/// full-rank exchange matrix in principle; warns and runs otherwise.
VerificationReport verify_analogues_sum(const PeriodicityInstance& inst, int j, int s,
                                        const QuadratureConfig& quad = {},
                                        double tol = kIdentityTol);

/// Bilinear symmetry in the initial z_{j,s}: with y_l(z) = y_{k_l}[l] and
/// p_l(z) = P_l(y_{k_l}[l]) as functions of that one coefficient,
///   sum (1/r) log y_l(za) log p_l(zb) = sum (1/r) log y_l(zb) log p_l(za).
VerificationReport verify_wedge_symmetry(const PeriodicityInstance& inst, int j, int s,
                                         double z_a, double z_b, double tol = kIdentityTol);

/// Central finite difference (steps h and h/2, Richardson-extrapolated) of
/// the no-eps dilogarithm sum in z_{j,s} against
///   sum_{l: k_l=j} ((1-eps_l)/(2 r_j)) int_0^inf u^{s_circ-1}/P_l(u) du.
VerificationReport verify_z_derivative(const PeriodicityInstance& inst, int j, int s,
                                        double h = 1e-4, double tol = 1e-6,
                                        const QuadratureConfig& quad = {});

/// Dilogarithm sums reused by the verifiers and by finite differencing.
double dilog_sum_eps(const PeriodicityInstance& inst, const Seed& start);
double dilog_sum_no_eps(const PeriodicityInstance& inst, const Seed& start);

} // namespace gca
