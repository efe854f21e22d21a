#include <doctest.h>

#include <set>

#include "hurwitz/gluing.hpp"

using namespace hurwitz;

namespace {

const Partition kMu{2, 1};
const Partition kNu{1, 1, 1};

// weighted forests by parent arrays: P roots, guests P+1.. with weights s;
// each guest contributes s^(number of its children)
BigInt weighted_forests(int P, const std::vector<int>& s) {
    const int m = static_cast<int>(s.size()), n = P + m;
    BigInt total = 0;
    std::vector<int> parent(n, -1);
    long codes = 1;
    for (int i = 0; i < m; ++i)
        codes *= n;
    for (long code = 0; code < codes; ++code) {
        long c = code;
        for (int v = P; v < n; ++v) {
            parent[v] = static_cast<int>(c % n);
            c /= n;
        }
        bool ok = true;
        for (int v = P; v < n && ok; ++v) {
            int x = v, steps = 0;
            while (x >= P && steps <= n) {
                x = parent[x];
                ++steps;
            }
            ok = x < P;
        }
        if (!ok)
            continue;
        BigInt w = 1;
        for (int v = P; v < n; ++v)
            if (parent[v] >= P)
                w *= s[parent[v] - P];
        total += w;
    }
    return total;
}

}  // namespace

TEST_CASE("precedes") {
    CHECK(precedes(Partition{1}, {2}, kMu));
    CHECK(precedes(kMu, {1, 2}, kMu));
    CHECK_FALSE(precedes(Partition{3}, {2}, kMu));
    CHECK_FALSE(precedes(Partition{1, 1}, {1}, kMu));
}

TEST_CASE("preceding pairs of ((2,1),(1,1,1)) are the four listed families") {
    const auto pairs = enumerate_preceding_pairs(kMu, kNu);
    CHECK(pairs.size() == 13);
    int size1 = 0, size2 = 0, size3 = 0;
    for (const auto& p : pairs) {
        CHECK(precedes(p.mu_p, p.I, kMu));
        CHECK(precedes(p.nu_p, p.J, kNu));
        switch (p.mu_p.size()) {
        case 1: ++size1; CHECK(p.mu_p == Partition{1}); break;
        case 2: ++size2; CHECK(p.nu_p == Partition{1, 1}); break;
        case 3: ++size3; CHECK(p.mu_p == kMu); break;
        }
    }
    CHECK(size1 == 6);
    CHECK(size2 == 6);
    CHECK(size3 == 1);
    const auto one = enumerate_preceding_pairs(Partition{1}, Partition{1});
    REQUIRE(one.size() == 1);
    CHECK(one[0].I == std::vector<int>{1});
}

TEST_CASE("preceding pairs against a subset/box recount") {
    for (const auto& [mu, nu] : {std::pair(Partition{2, 2}, Partition{3, 1}), std::pair(Partition{3, 1, 1}, Partition{2, 3}),
                                 std::pair(Partition{1, 2}, Partition{2, 1})}) {
        std::size_t expected = 0;
        // count mu' boxes per nonempty I and nu' boxes per nonempty J with equal sums
        std::map<int, std::size_t> left, right;
        auto boxes = [](const Partition& p, std::map<int, std::size_t>& by_sum) {
            const int l = p.length();
            for (int mask = 1; mask < (1 << l); ++mask) {
                std::vector<int> caps;
                for (int i = 0; i < l; ++i)
                    if (mask >> i & 1)
                        caps.push_back(p[i]);
                std::vector<int> v(caps.size(), 1);
                while (true) {
                    int s = 0;
                    for (int x : v)
                        s += x;
                    ++by_sum[s];
                    std::size_t k = 0;
                    while (k < v.size() && v[k] == caps[k])
                        v[k++] = 1;
                    if (k == v.size())
                        break;
                    ++v[k];
                }
            }
        };
        boxes(mu, left);
        boxes(nu, right);
        for (const auto& [s, c] : left)
            if (right.count(s))
                expected += c * right[s];
        CHECK(enumerate_preceding_pairs(mu, nu).size() == expected);
    }
}

TEST_CASE("gluing steps") {
    const auto st = make_state(Partition{1, 1}, {1, 2}, Partition{1, 1}, {1, 2});
    const auto next = apply_gluing_step(st, GluingStep{Color::black, 1, 3, 1}, kMu, kNu);
    CHECK(next.mu() == kMu);
    CHECK(next.nu() == kNu);
    CHECK(next.J() == std::vector<int>{1, 2, 3});
    CHECK(next.I() == std::vector<int>{1, 2});

    const Partition mu{1, 6, 1, 1}, nu{3, 2, 1, 3};
    const auto s2 = make_state(Partition{6, 1, 1}, {2, 3, 4}, Partition{2, 2, 1, 3}, {1, 2, 3, 4});
    const auto full = apply_gluing_step(s2, GluingStep{Color::white, 1, 1, 1}, mu, nu);
    CHECK(full.mu() == mu);
    CHECK(full.nu() == nu);

    // k must be new for a white step, l must exist; s bounded by the frame
    CHECK_THROWS_AS(apply_gluing_step(s2, GluingStep{Color::white, 2, 1, 1}, mu, nu), std::invalid_argument);
    CHECK_THROWS_AS(apply_gluing_step(st, GluingStep{Color::black, 1, 3, 2}, kMu, kNu), std::invalid_argument);
    CHECK_THROWS_AS(apply_gluing_step(st, GluingStep{Color::black, 3, 3, 1}, kMu, kNu), std::invalid_argument);
    // overshooting the host's final perimeter is caught by the sequence check
    GluingSequence over{kMu, kNu, st, {GluingStep{Color::black, 2, 3, 1}}};
    CHECK(over.check() != "");
}

TEST_CASE("gluing classes of the worked example") {
    const auto cls = enumerate_gluing_classes(Partition{1, 1}, Partition{1, 1}, {1, 2}, {1, 2}, kMu, kNu);
    REQUIRE(cls.size() == 1);
    REQUIRE(cls[0].canonical.steps.size() == 1);
    CHECK(cls[0].canonical.steps[0] == GluingStep{Color::black, 1, 3, 1});
    CHECK(sequence_multiplicity(cls[0].canonical, 0) == 3);
    CHECK(face_multiplicity(cls[0].canonical, Color::white, 1) == 1);
    const auto fa = first_appearance(cls[0].canonical);
    CHECK(fa.mu_S == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK(fa.nu_S == std::map<int, int>{{1, 1}, {2, 1}, {3, 1}});

    for (auto J : {std::vector<int>{1, 3}, std::vector<int>{2, 3}}) {
        const auto c = enumerate_gluing_classes(Partition{1, 1}, Partition{1, 1}, {1, 2}, J, kMu, kNu);
        REQUIRE(c.size() == 1);
        CHECK(sequence_multiplicity(c[0].canonical, 0) == 3);
    }
    CHECK(enumerate_gluing_classes(Partition{1}, Partition{1}, {1}, {1}, kMu, kNu).empty());
    CHECK(enumerate_gluing_classes(Partition{2}, Partition{1, 1}, {1}, {1, 2}, kMu, kNu).empty());

    const auto id = enumerate_gluing_classes(kMu, kNu, {1, 2}, {1, 2, 3}, kMu, kNu);
    REQUIRE(id.size() == 1);
    CHECK(id[0].canonical.steps.empty());
    CHECK(sequence_multiplicity(id[0].canonical, 0) == 1);
    const auto fa0 = first_appearance(id[0].canonical);
    CHECK(fa0.mu_S == std::map<int, int>{{1, 2}, {2, 1}});
}

TEST_CASE("sequences of the figure example") {
    const Partition mu{1, 6, 1, 1}, nu{3, 2, 1, 3};
    GluingSequence s;
    s.mu = mu;
    s.nu = nu;
    s.start = make_state(Partition{3, 1, 1}, {2, 3, 4}, Partition{2, 3}, {1, 4});
    s.steps = {{Color::black, 2, 2, 2}, {Color::black, 2, 3, 1}, {Color::white, 1, 1, 1}};
    CHECK(s.check() == "");
    const auto fa = first_appearance(s);
    CHECK(fa.mu_S.at(1) == 1);
    CHECK(fa.mu_S.at(2) == 3);
    CHECK(fa.nu_S.at(1) == 2);
    CHECK(fa.nu_S.at(2) == 2);
    CHECK(fa.nu_S.at(3) == 1);
    // size balance at every state
    for (const auto& st : s.states())
        CHECK(st.mu().size() == st.nu().size());

    // equivalent orderings share the class and the multiplicity
    GluingSequence t = s;
    t.steps = {{Color::white, 1, 1, 1}, {Color::black, 2, 3, 1}, {Color::black, 2, 2, 2}};
    CHECK(t.check() == "");
    CHECK(combinatorial_type(t) == combinatorial_type(s));
    CHECK(sequence_multiplicity(t, 0) == sequence_multiplicity(s, 0));
    // b = 6, b' = 3, three steps, white host 2 of perimeter 3 with guests (2,1)
    CHECK(face_multiplicity(s, Color::white, 2) == weighted_forests(3, {2, 1}));
    CHECK(face_multiplicity(s, Color::black, 1) == weighted_forests(2, {1}));
    CHECK(sequence_multiplicity(s, 0) ==
          binomial(6, 3) * factorial(3) * weighted_forests(3, {2, 1}) * weighted_forests(2, {1}));

    const auto canon = canonical_sequence(s.start, combinatorial_type(s), mu, nu);
    CHECK(combinatorial_type(canon) == combinatorial_type(s));
    CHECK(canon.steps <= t.steps);
    const auto cls = enumerate_gluing_classes(Partition{3, 1, 1}, Partition{2, 3}, {2, 3, 4}, {1, 4}, mu, nu);
    std::set<CombinatorialType> types;
    for (const auto& c : cls)
        types.insert(c.type);
    CHECK(types.size() == cls.size());
    CHECK(types.count(combinatorial_type(s)) == 1);
}

TEST_CASE("face multiplicity is the weighted forest count") {
    CHECK(face_multiplicity_sum(1, {2, 3}) == 6);
    CHECK(face_multiplicity_sum(4, {}) == 1);
    for (int P = 1; P <= 4; ++P)
        for (const auto& s : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 3}, {1, 2, 1}, {3, 1, 2}, {1, 1, 1, 1}})
            if (P + static_cast<int>(s.size()) <= 7)
                CHECK(face_multiplicity_sum(P, s) == weighted_forests(P, s));
}

TEST_CASE("invalid sequences are reported") {
    GluingSequence s;
    s.mu = kMu;
    s.nu = kNu;
    s.start = make_state(Partition{1, 1}, {1, 2}, Partition{1, 1}, {1, 2});
    CHECK(s.check() != "");  // does not reach the frame
    s.steps = {{Color::black, 1, 3, 1}};
    CHECK(s.check() == "");
}
