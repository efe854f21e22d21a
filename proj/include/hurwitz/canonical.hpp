#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/factorization.hpp"

namespace hurwitz {

// Lexicographically least conjugate under S_d of the concatenation
// [d, b, sigma_1 one-line, sigma_1 labels, tau_1, ..., tau_b, sigma_2 labels].
// stabilizer = number of g attaining the minimum = |Aut| of the galaxy.
struct CanonicalForm {
    std::vector<int> key;
    std::uint64_t stabilizer = 1;
};

CanonicalForm canonical_form(const LabeledFactorization& f);

}  // namespace hurwitz
