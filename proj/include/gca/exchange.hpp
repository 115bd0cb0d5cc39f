#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gca/matrix.hpp"

namespace gca {

// Practical engine caps. These are configuration limits of this
// implementation, not mathematical bounds.
inline constexpr int kMaxRank = 12;
inline constexpr int kMaxSequenceLength = 10000;

/// Fixed combinatorial frame: rank, exchange matrix B, diagonal
/// skew-symmetrizer R (so that RB is skew-symmetric) and mutation degrees d.
struct ExchangeData {
    int n = 0;
    IntMatrix b;
    std::vector<std::int64_t> r;
    std::vector<std::int64_t> d;

    ExchangeData() = default;
    ExchangeData(IntMatrix b_, std::vector<std::int64_t> r_, std::vector<std::int64_t> d_);

    /// Throws std::invalid_argument on any violated structural invariant.
    void validate() const;

    bool has_z_block() const; // true iff some d_i > 1
    bool is_full_rank() const;
};

/// One vertex of the exchange pattern over the positive reals:
/// y_i > 0 and z_{i,s} >= 0 with 1 <= s <= d_i - 1 (z[i] empty when d_i = 1).
struct Seed {
    ExchangeData ex;
    std::vector<double> y;
    std::vector<std::vector<double>> z;

    Seed() = default;
    Seed(ExchangeData ex_, std::vector<double> y_, std::vector<std::vector<double>> z_);

    void validate() const;

    /// Value of the exchange polynomial P_k at alpha (degree d_k, unit ends).
    double exchange_poly(int k, double alpha) const;

    /// Coefficient vector (1, z_{k,1}, ..., z_{k,d_k-1}, 1) of P_k.
    std::vector<double> exchange_poly_coeffs(int k) const;
};

/// Bijection of {0,...,n-1}; images[i] is the image of i.
struct Permutation {
    std::vector<int> images;

    Permutation() = default;
    explicit Permutation(std::vector<int> im);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i]; }

    /// Matrix P with P(i, sigma(i)) = 1. At a periodic endpoint the final
    /// C-matrix equals this matrix.
    IntMatrix matrix() const;
};

struct MutationSequence {
    std::vector<int> directions; // 0-based
    Permutation sigma;
};

ExchangeData mutate_matrix(const ExchangeData& ex, int k, int eps = +1);
Seed mutate_seed(const Seed& s, int k, int eps = +1);

/// Applies the whole direction sequence (sign +1 for every step unless
/// eps_seq is given; the seed map is sign-independent either way).
Seed apply_sequence(const Seed& s, std::span<const int> directions,
                    std::span<const int> eps_seq = {});

/// Ordinary seed (B diag(d), (y_i^{d_i})) with all degrees 1 and
/// skew-symmetrizer diag(r_i d_i).
Seed right_companion(const Seed& s);

struct PeriodicityReport {
    bool b_matches = false;   // exact integer condition
    double y_deviation = 0.0; // max relative deviation under sigma
    double z_deviation = 0.0;
    double tolerance = 0.0;
    bool periodic = false;
};

/// Runs the sequence from `start` and checks the three return conditions
/// b_{sigma(i) sigma(j)}[M+1] = b_{ij}[1], y_{sigma(i)}[M+1] = y_i[1],
/// z_{sigma(i),s}[M+1] = z_{i,s}[1] (B exactly, y and z within tol).
PeriodicityReport check_sigma_periodicity(const Seed& start, const MutationSequence& seq,
                                          std::span<const int> eps_seq, double tol = 1e-9);

/// Necessary condition on a periodicity candidate coming from the z-variable
/// dynamics: sigma fixes every i with d_i > 1, and when the index involution
/// s <-> d_i - s is nontrivial (d_i >= 3) direction i must occur an even
/// number of times.
bool validate_z_parity(const MutationSequence& seq, const ExchangeData& ex);

/// Relative deviation with an absolute floor, used by the numeric checks.
double relative_deviation(double a, double b);

} // namespace gca
