#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hurwitz/factorization.hpp"
#include "hurwitz/gluing.hpp"

namespace hurwitz {

class ResultCache;

using ValueOracle = std::function<Rational(const FactorizationType&)>;

// memoized engine lookups (optionally through the cache)
ValueOracle engine_oracle(Kind kind, const EngineConfig& config = {}, ResultCache* cache = nullptr);

struct CorrespondenceCell {
    Partition mu_p, nu_p;
    std::vector<int> I, J;
    CombinatorialType type;
    GluingSequence sequence;
    Rational hat;  // weight used in the sum (1 for correction cells)
    BigInt multiplicity;
    Rational contribution;
    bool correction = false;  // member of the delta_{g,0} sum
    std::optional<Rational> ph;  // bipruned value of (g, mu', nu') when requested
};

struct CorrespondenceReport {
    FactorizationType type;
    std::optional<Rational> lhs;
    Rational rhs;
    Rational first_sum;
    Rational delta_term;
    std::vector<CorrespondenceCell> cells;
    bool equal = false;
    Rational diff;  // lhs - rhs

    // diagnostics
    std::optional<Rational> ph_weighted_rhs;      // same sum with Ph instead of hat
    std::optional<Rational> empty_terminal_mass;  // mass of galaxies pruning to empty
};

// Both summands of the correspondence. Throws std::invalid_argument when
// l(mu) + l(nu) = 2. ph_oracle fills the Ph diagnostics when given.
CorrespondenceReport rhs_main_theorem(const FactorizationType& type, const ValueOracle& hat_oracle,
                                      const ValueOracle& ph_oracle = nullptr);

struct VerifyOptions {
    bool ph_diagnostics = true;
    bool empty_mass = true;  // needs a fiber pass; skipped above max_degree
};

CorrespondenceReport verify_type(const FactorizationType& type, const EngineConfig& config = {},
                                 ResultCache* cache = nullptr, const VerifyOptions& opts = {});
std::vector<CorrespondenceReport> verify_main_theorem(const std::vector<FactorizationType>& grid,
                                                      const EngineConfig& config = {},
                                                      ResultCache* cache = nullptr,
                                                      const VerifyOptions& opts = {});

// all (g, mu, nu) with degree <= max_d, genus <= max_g, 0 <= b <= max_b
std::vector<FactorizationType> type_grid(int max_d, int max_g, int max_b, bool exclude_two = true);

// Inverts the triangular system. Types with l(mu) + l(nu) = 2 have no equation;
// their hat values come from `seed` (throws std::out_of_range if missing).
std::map<FactorizationType, Rational> solve_for_hat(
    const std::map<FactorizationType, Rational>& h_table, const ValueOracle& seed = nullptr);

}  // namespace hurwitz
