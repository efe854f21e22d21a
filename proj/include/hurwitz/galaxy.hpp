#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hurwitz/canonical.hpp"
#include "hurwitz/factorization.hpp"
#include "hurwitz/gluing.hpp"

namespace hurwitz {

struct EtaSequence {
    std::vector<Permutation> etas;  // eta_0 = sigma_1, eta_i = tau_i eta_{i-1}
};

EtaSequence eta_sequence(const LabeledFactorization& f);
// tau_i = eta_i eta_{i-1}^{-1}
std::vector<Permutation> taus_from_etas(const EtaSequence& e);

struct LoopFace {
    int label = 0;
    std::optional<int> transposition;  // unique meeting index, absent when none
};

struct LoopFaceReport {
    std::vector<LoopFace> white;
    std::vector<LoopFace> black;
    bool empty() const { return white.empty() && black.empty(); }
};

LoopFaceReport loop_faces(const LabeledFactorization& f);

// One removal, labels in the numbering of the factorization it was applied to.
struct PruneStep {
    Color color = Color::white;
    int removed = 0;
    int host = 0;
    int perimeter = 0;
    int branch_index = 0;  // 0 when no transposition met the face (b = 0)
    FactorizationType before, after;
    bool to_empty = false;
    // filled in by full_prune
    int removed_original = 0;
    int host_original = 0;
};

struct PruneResult {
    LabeledFactorization result;
    PruneStep step;
};

// supp(tau_j) inside the removed cycle: the host is not determined
bool is_degenerate_white(const LabeledFactorization& f, int i);
bool is_degenerate_black(const LabeledFactorization& f, int j);

// throws std::invalid_argument when i is not a white loop face, std::domain_error
// in the degenerate case
PruneResult prune_white(const LabeledFactorization& f, int i);
PruneResult prune_black(const LabeledFactorization& f, int j);

enum class PolicyKind { first_available, random, alternating };

struct PrunePolicy {
    PolicyKind kind = PolicyKind::first_available;
    std::uint64_t seed = 0;
};

std::string to_string(const PrunePolicy& p);

// The b = 0 galaxy G_a met on the way to the empty terminal (original labels).
struct EmptyVia {
    int a = 0;
    int white_label = 0;
    int black_label = 0;
    LabeledFactorization galaxy;
};

// Attachment forest inside one host face: vertices 1..perimeter are the host's
// segments (roots), then the guests in gluing order.
struct HostForest {
    Color host_color = Color::white;
    int host_label = 0;  // original
    int perimeter = 0;   // first-appearance perimeter
    std::vector<int> guests;            // original labels, gluing order
    std::vector<int> guest_perimeters;  // s of each guest
    std::vector<std::pair<int, int>> edges;  // (child vertex, parent vertex)

    // children per vertex; the ForestSpec valency vector
    std::vector<int> valency() const;
    bool feasible() const;
};

struct PruneTrace {
    std::vector<PruneStep> steps;
    LabeledFactorization terminal;  // empty factorization when pruned away
    std::optional<EmptyVia> empty_via;
    std::vector<int> I, J;  // original labels of the surviving faces (or of G_a)
    GluingSequence recovered;
    std::vector<HostForest> forests;
    bool degenerate_stop = false;  // only degenerate loop faces were left
};

PruneTrace full_prune(const LabeledFactorization& f, const PrunePolicy& policy = {});

struct FiberCell {
    std::vector<int> terminal_key;  // canonical form of the terminal (G_a when empty)
    std::vector<int> I, J;
    CombinatorialType type;
    FactorizationType terminal_type;
    bool empty_terminal = false;
    std::uint64_t terminal_aut = 1;
    BigInt count;  // factorizations with sigma_1 = block representative
    Rational value;  // count * |Aut(terminal)| / prod(mu_i)
    GluingSequence sequence;  // canonical representative of the class
};

// Cells keyed by (terminal canonical form, I, J, combinatorial type).
// Summing value / |Aut(terminal)| over all cells gives the plain number.
std::vector<FiberCell> fiber_statistics(const FactorizationType& type, const EngineConfig& config = {},
                                        const PrunePolicy& policy = {});

}  // namespace hurwitz
