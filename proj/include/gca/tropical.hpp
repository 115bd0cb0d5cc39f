#pragma once

#include <span>
#include <vector>

#include "gca/exchange.hpp"

namespace gca {

/// (C, B) pair at one vertex along a mutation sequence, plus the sign of
/// every c-vector there. The recursion for C reads entries of the B-matrix
/// at the same vertex, so the two are stored together.
struct CPatternStep {
    IntMatrix c;
    IntMatrix b;
    std::vector<int> eps; // eps[j] = +1 or -1, sign of the j-th c-vector
};

/// Sign of column j of C. Throws if the column is zero or mixed-sign, which
/// would contradict sign coherence and therefore signals a bug upstream.
int c_vector_sign(const IntMatrix& c, int j);

/// One step of the C-matrix recursion in direction k: column k is negated,
/// column j != k becomes c_ij + [-c_ik d_k]_+ b_kj + c_ik [d_k b_kj]_+ with
/// b read from the current-step B.
IntMatrix c_matrix_step(const IntMatrix& c, const IntMatrix& b, int k,
                        std::span<const std::int64_t> d);

/// C-pattern along the sequence: steps[t] is the state at vertex t, with
/// steps[0].c the identity; size is directions.size() + 1.
std::vector<CPatternStep> compute_c_pattern(const ExchangeData& ex,
                                            std::span<const int> directions);

/// Tropical sign at each mutation step: sign of the k_l-th c-vector at the
/// vertex the step starts from.
std::vector<int> tropical_sign_sequence(const ExchangeData& ex, std::span<const int> directions);

} // namespace gca
