#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/config.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

struct FactorizationType {
    int genus = 0;
    Partition mu;
    Partition nu;

    int degree() const { return mu.size(); }
    int branch_points() const { return 2 * genus - 2 + mu.length() + nu.length(); }
    // throws std::invalid_argument
    void validate() const;
    std::string to_string() const;  // "(0,(2,1),(1,1,1))"

    auto operator<=>(const FactorizationType&) const = default;
};

// tau_b ... tau_1 sigma_1 = sigma_2. The degree-0 value (empty mu, nu) is the
// empty galaxy; it only appears as a pruning terminal.
struct LabeledFactorization {
    FactorizationType type;
    LabeledCycles sigma1;
    std::vector<Permutation> taus;
    LabeledCycles sigma2;

    int degree() const { return sigma1.base.degree(); }
    bool empty() const { return degree() == 0; }
    auto operator<=>(const LabeledFactorization&) const = default;
};

// sigma_1 pi_1 ... pi_b = sigma_2
struct InvertedFactorization {
    FactorizationType type;
    LabeledCycles sigma1;
    std::vector<Permutation> pis;
    LabeledCycles sigma2;

    auto operator<=>(const InvertedFactorization&) const = default;
};

LabeledFactorization empty_factorization();

// empty string when valid, otherwise the first violated invariant
std::string check_invariants(const LabeledFactorization& f);
std::string check_invariants(const InvertedFactorization& f);

InvertedFactorization to_inverted(const LabeledFactorization& f);
LabeledFactorization from_inverted(const InvertedFactorization& f);

// Colour swap: (sigma_2^{-1}, pi_b..pi_1, sigma_1^{-1}) of type (g, nu, mu).
// White loops of dual(f) are the black loops of f and vice versa; involution.
LabeledFactorization dual(const LabeledFactorization& f);

// simultaneous conjugation by g (labels transported)
LabeledFactorization conjugate(const LabeledFactorization& f, const Permutation& g);

// For every white label i: indices (1-based) of the taus meeting supp(sigma_1^i).
std::vector<std::vector<int>> white_meetings(const LabeledFactorization& f);
// For every black label j: indices of the pis meeting supp(sigma_2^j).
std::vector<std::vector<int>> black_meetings(const LabeledFactorization& f);

bool is_pruned(const LabeledFactorization& f);
bool is_bi_pruned(const LabeledFactorization& f);

enum class Kind { plain, pruned, bipruned, bipruned_hat };
std::string to_string(Kind k);
Kind parse_kind(const std::string& s);

struct HurwitzValue {
    Kind kind = Kind::plain;
    FactorizationType type;
    Rational value;
    // |F_kind| (labeled factorizations); for bipruned_hat the number of orbits
    BigInt count;
    // filtered factorizations with a nontrivial conjugation stabilizer,
    // counted with sigma_1 fixed to the block representative
    std::uint64_t nontrivial_stabilizers = 0;
    bool cache_hit = false;
    double seconds = 0.0;
};

// every labeled factorization exactly once, deterministic order
void for_each_factorization(const FactorizationType& type, const EngineConfig& config,
                            const std::function<void(const LabeledFactorization&)>& visit);
std::vector<LabeledFactorization> enumerate_factorizations(const FactorizationType& type,
                                                           const EngineConfig& config = {});

// only the factorizations whose labeled sigma_1 is the given one
void for_each_factorization_from(const FactorizationType& type, const LabeledCycles& sigma1,
                                 const EngineConfig& config,
                                 const std::function<void(const LabeledFactorization&)>& visit);

// Independent path: depth-first over pi-tuples with sigma_1 pi_1...pi_b built
// by right multiplication. Used to cross-check |F| = |F^in|.
void for_each_inverted_factorization(const FactorizationType& type, const EngineConfig& config,
                                     const std::function<void(const InvertedFactorization&)>& visit);

class ResultCache;

// Counting path: sigma_1 fixed to the block representative, see engine.cpp.
HurwitzValue hurwitz_number(const FactorizationType& type, Kind kind,
                            const EngineConfig& config = {}, ResultCache* cache = nullptr);

// all four kinds in one unfiltered pass
struct AllKinds {
    HurwitzValue plain, pruned, bipruned, hat;
};
AllKinds hurwitz_numbers(const FactorizationType& type, const EngineConfig& config = {});

void check_budget(const FactorizationType& type, const EngineConfig& config);

}  // namespace hurwitz
