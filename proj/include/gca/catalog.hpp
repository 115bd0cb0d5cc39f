#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gca/exchange.hpp"

namespace gca {

struct CatalogEntry {
    std::string name;
    ExchangeData ex;
    MutationSequence seq;
    std::string provenance;
};

/// Built-in periodicities: the rank-2 finite types and the generalized
/// degree-(2,1) and degree-(3,1) variants whose companions are of B2/G2
/// type. Every entry is reproducible with find_period.
const std::vector<CatalogEntry>& builtin_catalog();

const CatalogEntry& catalog_entry(const std::string& name);

/// Random positive seed over the given exchange data, for numeric checks.
Seed random_seed(const ExchangeData& ex, std::mt19937_64& rng, double y_lo = 0.3,
                 double y_hi = 3.0, double z_lo = 0.0, double z_hi = 2.0);

/// Confirms an entry numerically at `draws` random (y, z) starting points.
bool verify_catalog_entry(const CatalogEntry& entry, int draws = 3,
                          std::uint64_t rng_seed = 77, double tol = 1e-9);

struct FindPeriodOptions {
    int max_results = 16;
    std::uint64_t rng_seed = 12345;
    double tol = 1e-9;
};

/// Breadth-first (iterative-deepening) search over direction words with no
/// immediate repeats. A word is accepted when the final C-matrix is the
/// permutation matrix of some sigma, B returns under that sigma, the
/// z-parity condition holds, and the seed returns numerically at 3 random
/// positive starting points. Returns the representatives of the smallest
/// length that admits any; empty when the budget max_len is exhausted.
std::vector<MutationSequence> find_period(const ExchangeData& ex, int max_len,
                                          const FindPeriodOptions& opts = {});

} // namespace gca
