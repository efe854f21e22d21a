#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class Color { white, black };
std::string to_string(Color c);

// Partial tuple (mu~, nu~) indexed by the labels currently present, inside a
// frame (mu, nu). white: label -> perimeter (labels of mu), black likewise.
struct GluingState {
    std::map<int, int> white;
    std::map<int, int> black;

    Partition mu() const;  // values in increasing label order
    Partition nu() const;
    std::vector<int> I() const;
    std::vector<int> J() const;
    auto operator<=>(const GluingState&) const = default;
};

GluingState make_state(const Partition& mu_p, const std::vector<int>& I, const Partition& nu_p,
                       const std::vector<int>& J);

// Black: k in I hosts new black face l (not in J) of perimeter s <= nu_l.
// White: new white face k (not in I) of perimeter s <= mu_k glued into black face l in J.
struct GluingStep {
    Color color = Color::white;
    int k = 0;
    int l = 0;
    int s = 0;
    auto operator<=>(const GluingStep&) const = default;
};

// throws std::invalid_argument when the step does not apply
GluingState apply_gluing_step(const GluingState& state, const GluingStep& step,
                              const Partition& mu, const Partition& nu);

struct GluingSequence {
    Partition mu, nu;  // target frame
    GluingState start;
    std::vector<GluingStep> steps;

    std::vector<GluingState> states() const;  // start, then after each step
    std::vector<int> I() const { return start.I(); }
    std::vector<int> J() const { return start.J(); }
    // empty when valid
    std::string check() const;
};

struct CombinatorialType {
    std::set<std::tuple<int, int, int>> white;  // (k, l, s)
    std::set<std::tuple<int, int, int>> black;
    auto operator<=>(const CombinatorialType&) const = default;
};

CombinatorialType combinatorial_type(const GluingSequence& s);

struct FirstAppearance {
    std::map<int, int> mu_S;  // over all labels of mu
    std::map<int, int> nu_S;
};

FirstAppearance first_appearance(const GluingSequence& s);

// mu' <=_I mu: l(mu') = |I| and mu'_r <= mu_{I_r} (I increasing, 1-based)
bool precedes(const Partition& mu_p, const std::vector<int>& I, const Partition& mu);

struct PrecedingPair {
    Partition mu_p, nu_p;
    std::vector<int> I, J;
    auto operator<=>(const PrecedingPair&) const = default;
};

// All (mu', nu', I, J) with I, J nonempty, mu' <=_I mu, nu' <=_J nu and
// |mu'| = |nu'| >= 1. The ((a),(a)) cells of the correction term are among them.
std::vector<PrecedingPair> enumerate_preceding_pairs(const Partition& mu, const Partition& nu);

struct GluingClass {
    CombinatorialType type;
    GluingSequence canonical;  // lexicographically least valid ordering
    FirstAppearance first;
};

std::vector<GluingClass> enumerate_gluing_classes(const Partition& mu_p, const Partition& nu_p,
                                                  const std::vector<int>& I,
                                                  const std::vector<int>& J, const Partition& mu,
                                                  const Partition& nu);

// Builds the canonical sequence of a class given only its combinatorial type.
// Throws when no valid ordering exists.
GluingSequence canonical_sequence(const GluingState& start, const CombinatorialType& type,
                                  const Partition& mu, const Partition& nu);

// Literal double sum over nonnegative a of length P + m with |a| = m.
BigInt face_multiplicity_sum(int perimeter, const std::vector<int>& guest_perimeters);
// side white: mult over black steps hosted by white face `label`; black: symmetric
BigInt face_multiplicity(const GluingSequence& s, Color side, int label);
BigInt sequence_multiplicity(const GluingSequence& s, int genus);

}  // namespace hurwitz
