#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gca {

/// Dense square integer matrix, row-major. All mutation combinatorics is
/// exact int64 arithmetic; helpers throw std::overflow_error on wrap.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {}
    IntMatrix(int n, std::vector<std::int64_t> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(n) * n)
            throw std::invalid_argument("IntMatrix: entry count does not match dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int size() const { return n_; }

    std::int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    std::int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    const std::vector<std::int64_t>& data() const { return a_; }

private:
    int n_ = 0;
    std::vector<std::int64_t> a_;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

/// max(a, 0), the positive-part bracket used throughout the mutation rules.
inline std::int64_t pos_part(std::int64_t a) { return a > 0 ? a : 0; }

std::string to_string(const IntMatrix& m);

} // namespace gca
