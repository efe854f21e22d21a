#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/correspondence.hpp"
#include "hurwitz/forest.hpp"
#include "hurwitz/galaxy.hpp"

// Property suites shared by the CLI and the acceptance run. Each returns the
// full tally plus every counterexample (capped by max_failures).

namespace hurwitz {

struct SuiteOptions {
    EngineConfig config;
    std::uint64_t seed = 1;
    std::size_t max_failures = 20;
};

struct ForestMismatch {
    ForestSpec spec;
    BigInt formula, brute;
};
struct ForestFactResult {
    int specs = 0;
    std::vector<ForestMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};
// every valid spec with n <= max_n against the brute-force tally
ForestFactResult verify_forest_fact(int max_n, const SuiteOptions& opts = {});

struct PruningMismatch {
    FactorizationType type;
    std::string factorization;  // taus as cycle strings
    std::vector<std::string> policies;
    std::vector<std::vector<int>> keys;
};
struct PruningOrderResult {
    int types = 0;
    std::uint64_t factorizations = 0;
    std::uint64_t empty_terminals = 0;
    std::uint64_t degenerate_stops = 0;
    std::vector<PruningMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};
// sigma_1 fixed to the block representative (terminals are conjugation-equivariant)
PruningOrderResult verify_pruning_order(const std::vector<FactorizationType>& grid,
                                        const SuiteOptions& opts = {});

struct FiberMismatch {
    FactorizationType type;
    FiberCell cell;
    BigInt multiplicity;
};
struct FiberResult {
    int types = 0;
    std::uint64_t cells = 0;
    std::uint64_t empty_cells = 0;
    std::vector<FiberMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};
FiberResult verify_fibers(const std::vector<FactorizationType>& grid, const SuiteOptions& opts = {});

struct BijectionFailure {
    std::string what;
    FactorizationType type;
    std::string detail;
};
struct BijectionResult {
    int exhaustive_types = 0;
    std::uint64_t exhaustive_factorizations = 0;
    std::uint64_t random_factorizations = 0;
    std::vector<BijectionFailure> failures;
    bool ok() const { return failures.empty(); }
};
// |F| = |F^in| and both round trips on every type of the grid, then on
// `random_count` random factorizations of degree <= random_max_degree
BijectionResult verify_bijection(const std::vector<FactorizationType>& grid, int random_count,
                                 int random_max_degree, const SuiteOptions& opts = {});

// a uniformly random transitive product of `b` transpositions, labels shuffled
LabeledFactorization random_factorization(int d, int b, std::mt19937_64& rng);

struct ValueMismatch {
    FactorizationType type;
    Rational expected, actual;
};
struct InversionResult {
    int table_size = 0;
    int compared = 0;
    std::vector<ValueMismatch> mismatches;  // expected = direct hat, actual = recovered
    bool ok() const { return mismatches.empty(); }
};
// plain table over the grid, solve_for_hat, compare with direct orbit counts
InversionResult verify_inversion(const std::vector<FactorizationType>& grid, const SuiteOptions& opts = {},
                                 ResultCache* cache = nullptr);

struct HatConsistencyResult {
    int types = 0;
    int loop_types = 0;
    std::vector<ValueMismatch> mismatches;  // expected = Ph (or 0), actual = hat
    bool ok() const { return mismatches.empty(); }
};
// hat = Ph on grid types with l(mu)+l(nu) != 2, hat(0,(a),(a)) = 0 for a <= max_a
HatConsistencyResult verify_hat_consistency(const std::vector<FactorizationType>& grid, int max_a,
                                            const SuiteOptions& opts = {},
                                            ResultCache* cache = nullptr);

}  // namespace hurwitz
