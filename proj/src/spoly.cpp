#include "gca/spoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gca {

VarTable::VarTable(const ExchangeData& ex) : n(ex.n), d(ex.d), z_offset(ex.n, 0) {
    int off = 0;
    for (int i = 0; i < n; ++i) {
        z_offset[i] = off;
        off += static_cast<int>(d[i] - 1);
    }
    total = n + off;
}

std::string VarTable::name(int var) const {
    if (var < n) return "y" + std::to_string(var + 1);
    for (int i = 0; i < n; ++i) {
        const int lo = n + z_offset[i];
        const int hi = lo + static_cast<int>(d[i] - 1);
        if (var >= lo && var < hi)
            return "z" + std::to_string(i + 1) + "," + std::to_string(var - lo + 1);
    }
    throw std::invalid_argument("variable id out of range");
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    std::int64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

constexpr std::int32_t kMaxExponent = 1 << 24;
constexpr size_t kMaxTerms = 1u << 17; // desk-scale cap

std::int32_t checked_exp_add(std::int32_t a, std::int32_t b) {
    const std::int64_t r = static_cast<std::int64_t>(a) + b;
    if (r > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    return static_cast<std::int32_t>(r);
}

} // namespace

SparsePoly SparsePoly::constant(int nvars, std::int64_t c) {
    SparsePoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::variable(int nvars, int var, std::int32_t exponent) {
    if (var < 0 || var >= nvars) throw std::invalid_argument("variable id out of range");
    if (exponent < 0) throw std::invalid_argument("exponents must be nonnegative");
    SparsePoly p(nvars);
    Monomial m(nvars, 0);
    m[var] = exponent;
    p.terms_.emplace(std::move(m), 1);
    return p;
}

bool SparsePoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           terms_.begin()->first == Monomial(nvars_, 0);
}

void SparsePoly::add_term(Monomial m, std::int64_t c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("monomial width mismatch");
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
        terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
    return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    r += o;
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    r -= o;
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable mismatch");
    SparsePoly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (int v = 0; v < nvars_; ++v) m[v] = checked_exp_add(ma[v], mb[v]);
            r.add_term(std::move(m), checked_mul(ca, cb));
        }
        if (r.terms_.size() > kMaxTerms)
            throw std::overflow_error("polynomial exceeds the term cap");
    }
    return r;
}

SparsePoly SparsePoly::pow(std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    SparsePoly r = constant(nvars_, 1);
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

double SparsePoly::evaluate(std::span<const double> values) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong dimension");
    double sum = 0.0, comp = 0.0; // Neumaier compensation
    for (const auto& [m, c] : terms_) {
        double t = static_cast<double>(c);
        for (int v = 0; v < nvars_; ++v) {
            if (m[v] == 1) t *= values[v];
            else if (m[v] > 1) t *= std::pow(values[v], static_cast<double>(m[v]));
        }
        const double s = sum + t;
        comp += std::abs(sum) >= std::abs(t) ? (sum - s) + t : (t - s) + sum;
        sum = s;
    }
    return sum + comp;
}

SparsePoly SparsePoly::y_constant_part(int ny) const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        bool yfree = true;
        for (int v = 0; v < ny; ++v)
            if (m[v] != 0) { yfree = false; break; }
        if (yfree) r.add_term(m, c);
    }
    return r;
}

bool SparsePoly::all_coefficients_nonnegative() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string SparsePoly::to_string(const VarTable& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool printed = false;
        if (mag != 1) {
            os << mag;
            printed = true;
        }
        for (int v = 0; v < static_cast<int>(m.size()); ++v) {
            if (m[v] == 0) continue;
            if (printed) os << "*";
            os << vars.name(v);
            if (m[v] > 1) os << "^" << m[v];
            printed = true;
        }
        if (!printed) os << 1;
    }
    return os.str();
}

SparsePoly poly_exact_div(const SparsePoly& a, const SparsePoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomial variable mismatch");
    SparsePoly q(a.nvars());
    SparsePoly rem = a;
    const auto& ltb = *b.terms().begin();
    while (!rem.is_zero()) {
        const auto& ltr = *rem.terms().begin();
        Monomial m(a.nvars());
        for (int v = 0; v < a.nvars(); ++v) {
            m[v] = ltr.first[v] - ltb.first[v];
            if (m[v] < 0) throw std::domain_error("inexact polynomial division");
        }
        if (ltr.second % ltb.second != 0) throw std::domain_error("inexact polynomial division");
        SparsePoly t(a.nvars());
        t.add_term(std::move(m), ltr.second / ltb.second);
        q += t;
        rem -= t * b;
    }
    return q;
}

} // namespace gca
