#include "gca/catalog.hpp"

#include <algorithm>
#include <stdexcept>

#include "gca/tropical.hpp"

namespace gca {

namespace {

ExchangeData rank2(std::int64_t b12, std::int64_t b21, std::vector<std::int64_t> r,
                   std::vector<std::int64_t> d) {
    IntMatrix b(2);
    b(0, 1) = b12;
    b(1, 0) = b21;
    return ExchangeData(std::move(b), std::move(r), std::move(d));
}

std::vector<int> alternating(int len) {
    std::vector<int> seq(len);
    for (int i = 0; i < len; ++i) seq[i] = i % 2;
    return seq;
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> cat;
    cat.push_back({"a1a1", rank2(0, 0, {1, 1}, {1, 1}),
                   {alternating(4), Permutation::identity(2)},
                   "disconnected rank 2; alternating word of length 4"});
    cat.push_back({"a2", rank2(1, -1, {1, 1}, {1, 1}),
                   {alternating(5), Permutation({1, 0})},
                   "length 5 with the transposition; the pentagon"});
    cat.push_back({"b2", rank2(1, -2, {2, 1}, {1, 1}),
                   {alternating(6), Permutation::identity(2)},
                   "length 6, skew-symmetrizer diag(2,1)"});
    cat.push_back({"g2", rank2(1, -3, {3, 1}, {1, 1}),
                   {alternating(8), Permutation::identity(2)},
                   "length 8, skew-symmetrizer diag(3,1)"});
    cat.push_back({"b2gen", rank2(1, -1, {1, 1}, {2, 1}),
                   {alternating(6), Permutation::identity(2)},
                   "degrees (2,1); companion of B2 type, length 6"});
    cat.push_back({"g2gen", rank2(1, -1, {1, 1}, {3, 1}),
                   {alternating(8), Permutation::identity(2)},
                   "degrees (3,1); companion of G2 type, length 8"});
    return cat;
}

} // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> cat = make_catalog();
    return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : builtin_catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("unknown catalog entry: " + name);
}

Seed random_seed(const ExchangeData& ex, std::mt19937_64& rng, double y_lo, double y_hi,
                 double z_lo, double z_hi) {
    std::uniform_real_distribution<double> ydist(y_lo, y_hi);
    std::uniform_real_distribution<double> zdist(z_lo, z_hi);
    std::vector<double> y(ex.n);
    std::vector<std::vector<double>> z(ex.n);
    for (int i = 0; i < ex.n; ++i) {
        y[i] = ydist(rng);
        z[i].resize(ex.d[i] - 1);
        for (auto& v : z[i]) v = zdist(rng);
    }
    return Seed(ex, std::move(y), std::move(z));
}

bool verify_catalog_entry(const CatalogEntry& entry, int draws, std::uint64_t rng_seed,
                          double tol) {
    std::mt19937_64 rng(rng_seed);
    const auto eps = tropical_sign_sequence(entry.ex, entry.seq.directions);
    for (int t = 0; t < draws; ++t) {
        const Seed s = random_seed(entry.ex, rng);
        if (!check_sigma_periodicity(s, entry.seq, eps, tol).periodic) return false;
    }
    return true;
}

namespace {

// reads sigma off a 0/1 permutation matrix: sigma(i) = the unique j with
// c(i, j) = 1; nullopt when c is not of that shape
std::optional<Permutation> permutation_of(const IntMatrix& c) {
    const int n = c.size();
    std::vector<int> images(n, -1), seen(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (c(i, j) == 0) continue;
            if (c(i, j) != 1 || images[i] >= 0) return std::nullopt;
            images[i] = j;
        }
        if (images[i] < 0 || seen[images[i]]++) return std::nullopt;
    }
    return Permutation(images);
}

bool b_returns_under(const IntMatrix& b0, const IntMatrix& b1, const Permutation& sg) {
    for (int i = 0; i < b0.size(); ++i)
        for (int j = 0; j < b0.size(); ++j)
            if (b1(sg(i), sg(j)) != b0(i, j)) return false;
    return true;
}

} // namespace

std::vector<MutationSequence> find_period(const ExchangeData& ex, int max_len,
                                          const FindPeriodOptions& opts) {
    if (ex.n > 4) throw std::invalid_argument("period search is limited to rank <= 4");
    if (max_len > 12) throw std::invalid_argument("period search budget is capped at 12 steps");

    std::mt19937_64 rng(opts.rng_seed);
    std::vector<Seed> probes;
    for (int t = 0; t < 3; ++t) probes.push_back(random_seed(ex, rng));

    std::vector<MutationSequence> found;
    int best_len = max_len; // shrinks once something is found
    std::vector<int> word;

    const auto consider = [&](const IntMatrix& c, const IntMatrix& b) {
        const auto sigma = permutation_of(c);
        if (!sigma) return;
        if (!b_returns_under(ex.b, b, *sigma)) return;
        MutationSequence seq{word, *sigma};
        if (!validate_z_parity(seq, ex)) return;
        const auto eps = tropical_sign_sequence(ex, seq.directions);
        for (const auto& probe : probes)
            if (!check_sigma_periodicity(probe, seq, eps, opts.tol).periodic) return;
        if (static_cast<int>(word.size()) < best_len) {
            best_len = static_cast<int>(word.size());
            found.clear();
        }
        if (static_cast<int>(found.size()) < opts.max_results) found.push_back(std::move(seq));
    };

    // depth-first over reduced words (no immediate repeats); the depth cap
    // tightens to the best length found so only minimal representatives
    // survive; branches whose entries leave the int64 range cannot return
    // to the start and are dropped
    const auto dfs = [&](auto&& self, const IntMatrix& c, const IntMatrix& b) -> void {
        if (static_cast<int>(word.size()) >= best_len) return;
        for (int k = 0; k < ex.n; ++k) {
            if (!word.empty() && word.back() == k) continue;
            IntMatrix nc, nb;
            try {
                nc = c_matrix_step(c, b, k, ex.d);
                ExchangeData tmp = ex;
                tmp.b = b;
                nb = mutate_matrix(tmp, k).b;
            } catch (const std::overflow_error&) {
                continue;
            }
            word.push_back(k);
            consider(nc, nb);
            self(self, nc, nb);
            word.pop_back();
        }
    };
    dfs(dfs, IntMatrix::identity(ex.n), ex.b);
    return found;
}

} // namespace gca
