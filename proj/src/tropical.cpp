#include "gca/tropical.hpp"

#include <stdexcept>

namespace gca {

int c_vector_sign(const IntMatrix& c, int j) {
    bool has_pos = false, has_neg = false;
    for (int i = 0; i < c.size(); ++i) {
        if (c(i, j) > 0) has_pos = true;
        if (c(i, j) < 0) has_neg = true;
    }
    if (has_pos == has_neg)
        throw std::logic_error("c-vector " + std::to_string(j + 1) +
                               " is zero or mixed-sign; sign coherence violated");
    return has_pos ? +1 : -1;
}

IntMatrix c_matrix_step(const IntMatrix& c, const IntMatrix& b, int k,
                        std::span<const std::int64_t> d) {
    const int n = c.size();
    if (b.size() != n || static_cast<int>(d.size()) != n)
        throw std::invalid_argument("c_matrix_step: dimension mismatch");
    if (k < 0 || k >= n) throw std::invalid_argument("c_matrix_step: direction out of range");
    IntMatrix out(n);
    const auto dk = d[k];
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == k) {
                out(i, j) = -c(i, k);
            } else {
                const auto t1 = checked_mul(pos_part(checked_mul(-c(i, k), dk)), b(k, j));
                const auto t2 = checked_mul(c(i, k), pos_part(checked_mul(dk, b(k, j))));
                out(i, j) = checked_add(c(i, j), checked_add(t1, t2));
            }
        }
    }
    return out;
}

std::vector<CPatternStep> compute_c_pattern(const ExchangeData& ex,
                                            std::span<const int> directions) {
    std::vector<CPatternStep> steps;
    steps.reserve(directions.size() + 1);

    CPatternStep cur;
    cur.c = IntMatrix::identity(ex.n);
    cur.b = ex.b;
    cur.eps.resize(ex.n);
    for (int j = 0; j < ex.n; ++j) cur.eps[j] = c_vector_sign(cur.c, j);
    steps.push_back(cur);

    ExchangeData exc = ex;
    for (int k : directions) {
        CPatternStep next;
        next.c = c_matrix_step(cur.c, cur.b, k, exc.d);
        exc = mutate_matrix(exc, k);
        next.b = exc.b;
        next.eps.resize(ex.n);
        for (int j = 0; j < ex.n; ++j) next.eps[j] = c_vector_sign(next.c, j);
        steps.push_back(next);
        cur = steps.back();
    }
    return steps;
}

std::vector<int> tropical_sign_sequence(const ExchangeData& ex, std::span<const int> directions) {
    const auto pat = compute_c_pattern(ex, directions);
    std::vector<int> out(directions.size());
    for (size_t l = 0; l < directions.size(); ++l) out[l] = pat[l].eps[directions[l]];
    return out;
}

} // namespace gca
