#pragma once

#include <string>
#include <vector>

#include "hurwitz/factorization.hpp"

namespace fixtures {

using namespace hurwitz;

// labels given per point, 1-based points in the cycle strings
inline LabeledCycles labeled(int d, const std::string& cycles, std::vector<int> label_of) {
    return LabeledCycles{parse_cycles(d, cycles), std::move(label_of)};
}

inline LabeledFactorization make(int g, int d, const std::string& s1, std::vector<int> l1,
                                 const std::vector<std::string>& taus, const std::string& s2,
                                 std::vector<int> l2) {
    LabeledFactorization f;
    f.sigma1 = labeled(d, s1, std::move(l1));
    f.sigma2 = labeled(d, s2, std::move(l2));
    for (const auto& t : taus)
        f.taus.push_back(parse_cycles(d, t));
    f.type = FactorizationType{g, f.sigma1.profile(), f.sigma2.profile()};
    return f;
}

// galaxy of type (0,(3,1),(2,1,1)) with markings a1..a4; black face 3 is (a2)
inline LabeledFactorization exsym() {
    return make(0, 4, "(1 2 3)(4)", {1, 1, 1, 2}, {"(1 4)", "(2 3)", "(1 4)"}, "(1 3)(2)(4)", {1, 3, 1, 2});
}

// bi-pruned galaxy of type (0,(2,1),(2,1))
inline LabeledFactorization exsym2() {
    return make(0, 3, "(1 2)(3)", {1, 1, 2}, {"(2 3)", "(1 3)"}, "(1)(2 3)", {2, 1, 1});
}

// type (0,(1,6,1,1),(3,2,1,3)); prunes in three steps to (0,(3,1,1),(2,3))
inline LabeledFactorization exprun() {
    return make(0, 9, "(1)(2)(3 7 6 8 4 5)(9)", {3, 4, 2, 2, 2, 2, 2, 2, 1},
                {"(2 9)", "(1 2)", "(1 3)", "(2 7)", "(7 8)", "(4 8)"}, "(1 4 5)(2 9 3)(6 7)(8)",
                {4, 1, 1, 4, 4, 2, 2, 3, 1});
}

}  // namespace fixtures
