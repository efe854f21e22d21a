#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hurwitz/config.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Forests on vertices 1..n, roots 1..k in distinct components, exactly k
// components. a[i] is the valency of vertex i+1, except that non-roots carry
// one extra edge (towards their root) which is not counted: val = a_i for roots,
// a_i + 1 otherwise.
struct ForestSpec {
    int k = 1;
    std::vector<int> a;

    int n() const { return static_cast<int>(a.size()); }
    bool valid() const;
};

struct LabeledForest {
    std::vector<std::pair<int, int>> edges;  // 1-based, smaller endpoint first, sorted
    auto operator<=>(const LabeledForest&) const = default;
};

BigInt forest_count(const ForestSpec& spec);

// brute force over edge subsets; throws BudgetExceeded past the oracle bound
std::vector<LabeledForest> enumerate_forests(const ForestSpec& spec,
                                             const EngineConfig& config = {});

// All forests on [n] with roots 1..k separated and k components, tallied by
// their valency vector a. One pass per (n, k); used to sweep every spec at once.
std::map<std::vector<int>, BigInt> tally_forests(int n, int k, const EngineConfig& config = {});

}  // namespace hurwitz
