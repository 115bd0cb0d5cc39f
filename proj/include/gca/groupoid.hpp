#pragma once

#include <span>
#include <vector>

#include "gca/dilog.hpp"
#include "gca/exchange.hpp"
#include "gca/quadrature.hpp"

namespace gca {

/// Seed extended with q-variables (one per index) and a-variables (indexed
/// like the z-variables).
struct GroupoidSeed {
    Seed base;
    std::vector<double> q;
    std::vector<std::vector<double>> a;

    GroupoidSeed() = default;
    GroupoidSeed(Seed base_, std::vector<double> q_, std::vector<std::vector<double>> a_);

    void validate() const;
};

/// exp shifts of the action: beta(y_j) = y_j exp(sum_i r_i b_ij y_i q_i).
std::vector<double> beta_values(const Seed& base, std::span<const double> q);

/// The acted seed (B, beta(y), z).
Seed beta_action(const GroupoidSeed& g);

/// Groupoid mutation in direction k with sign eps: the base seed mutates as
/// usual; q and a follow the groupoid rules, with the a-update integral
///   a'_{k,s} = a_{k,d_k-s} + (eps/r_k) int_{y_k^eps}^{beta(y_k)^eps}
///              u^{eps(d_k-s)-1} / P_k(u^eps) du
/// evaluated by adaptive quadrature (for eps = -1 the integrand is rewritten
/// on the reversed polynomial, keeping it regular). For pattern semantics
/// eps should be the tropical sign at the current vertex.
GroupoidSeed mutate_groupoid_seed(const GroupoidSeed& g, int k, int eps,
                                  const QuadratureConfig& quad = {});

GroupoidSeed apply_groupoid_sequence(const GroupoidSeed& g, std::span<const int> directions,
                                     std::span<const int> eps_seq,
                                     const QuadratureConfig& quad = {});

/// Solves sum_i r_i b_ij y_i q_i = -lambda for all j, i.e. the linear system
/// -R B diag(y) q = (-lambda, ..., -lambda); afterwards beta(y_j) =
/// y_j e^{-lambda} uniformly. Throws std::domain_error when B is singular.
std::vector<double> solve_q_for_uniform_shift(const Seed& s, double lambda);

struct CommuteReport {
    double max_relative_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Compares mutating then acting against acting then mutating, componentwise
/// on the y-variables.
CommuteReport verify_action_commutes(const GroupoidSeed& g, int k, int eps, double tol = 1e-10,
                                     const QuadratureConfig& quad = {});

} // namespace gca
