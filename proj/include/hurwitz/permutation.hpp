#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

// Permutation of the ground set {0,...,d-1}; printed 1-based.
// compose(p, q) applies q first: compose(p, q)(x) = p(q(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int d);
    static Permutation transposition(int d, int a, int b);  // 0-based points
    // cycles given 0-based
    static Permutation from_cycles(int d, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    bool is_transposition() const;
    // for a transposition: the two moved points, smaller first
    std::pair<int, int> transposed_pair() const;

    std::vector<std::vector<int>> cycles() const;  // each starts at its least element
    int num_cycles() const;
    std::vector<int> support() const;

    // "(1 2 3)(4)"; fixed points included when with_fixed
    std::string to_cycle_string(bool with_fixed = true) const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
// g p g^{-1}
Permutation conjugate(const Permutation& p, const Permutation& g);
// cycle lengths, fixed points included, descending
std::vector<int> cycle_type(const Permutation& p);
bool is_transitive(std::span<const Permutation> generators, int d);
Permutation random_permutation(int d, std::mt19937_64& rng);

// parses "(1 2 3)(4)" with 1-based points
Permutation parse_cycles(int d, const std::string& text);

class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int x);
    bool unite(int a, int b);
    int components() const { return components_; }

private:
    std::vector<int> parent_;
    int components_;
};

// A permutation together with a labeling of its disjoint cycles by 1..r.
struct LabeledCycles {
    Permutation base;
    std::vector<int> label_of;  // label_of[x] in 1..r

    int num_labels() const;
    std::vector<int> support_of(int label) const;  // sorted
    // partition whose part i is the length of the cycle labeled i
    Partition profile() const;
    bool matches(const Partition& p) const;

    auto operator<=>(const LabeledCycles&) const = default;
};

// All labelings of p's cycles such that cycle labeled i has length part(i).
std::vector<LabeledCycles> admissible_labelings(const Permutation& p, const Partition& profile);

// The fixed representative: cycles on consecutive blocks, block i of length part(i).
LabeledCycles block_representative(const Partition& profile);

LabeledCycles conjugate(const LabeledCycles& c, const Permutation& g);

}  // namespace hurwitz
