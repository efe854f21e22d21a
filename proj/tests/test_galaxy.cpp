#include <doctest.h>

#include "fixtures.hpp"
#include "hurwitz/correspondence.hpp"
#include "hurwitz/galaxy.hpp"

using namespace hurwitz;

namespace {

std::vector<int> labels_of(const std::vector<LoopFace>& xs) {
    std::vector<int> out;
    for (const auto& x : xs)
        out.push_back(x.label);
    return out;
}

}  // namespace

TEST_CASE("eta sequences of the symmetric examples") {
    const auto e = eta_sequence(fixtures::exsym());
    REQUIRE(e.etas.size() == 4);
    CHECK(e.etas[0] == parse_cycles(4, "(1 2 3)(4)"));
    CHECK(e.etas[1] == parse_cycles(4, "(1 2 3 4)"));
    CHECK(e.etas[2] == parse_cycles(4, "(1 3 4)(2)"));
    CHECK(e.etas[3] == parse_cycles(4, "(1 3)(2)(4)"));
    CHECK(taus_from_etas(e) == fixtures::exsym().taus);

    const auto e2 = eta_sequence(fixtures::exsym2());
    REQUIRE(e2.etas.size() == 3);
    CHECK(e2.etas[1] == parse_cycles(3, "(1 3 2)"));
    CHECK(e2.etas[2] == parse_cycles(3, "(2 3)"));

    const auto g = fixtures::make(0, 2, "(1 2)", {1, 1}, {}, "(1 2)", {1, 1});
    CHECK(eta_sequence(g).etas.size() == 1);
}

TEST_CASE("loop faces") {
    const auto r = loop_faces(fixtures::exsym());
    CHECK(r.white.empty());
    CHECK(labels_of(r.black) == std::vector<int>{3});
    REQUIRE(r.black[0].transposition.has_value());
    CHECK(*r.black[0].transposition == 2);
    CHECK(loop_faces(fixtures::exsym2()).empty());
    for (int a = 1; a <= 4; ++a) {
        const auto ga = enumerate_factorizations(FactorizationType{0, {a}, {a}}).front();
        const auto rep = loop_faces(ga);
        CHECK(labels_of(rep.white) == std::vector<int>{1});
        CHECK(labels_of(rep.black) == std::vector<int>{1});
        CHECK_FALSE(rep.white[0].transposition.has_value());
    }
    // simultaneously empty iff bi-pruned
    for_each_factorization(FactorizationType{0, {2, 2}, {1, 1, 2}}, {}, [](const LabeledFactorization& f) {
        CHECK(loop_faces(f).empty() == is_bi_pruned(f));
    });
}

TEST_CASE("loop faces are conjugation invariant") {
    std::mt19937_64 rng(11);
    const auto f = fixtures::exprun();
    const auto base = loop_faces(f);
    for (int i = 0; i < 5; ++i) {
        const auto c = conjugate(f, random_permutation(9, rng));
        const auto r = loop_faces(c);
        CHECK(labels_of(r.white) == labels_of(base.white));
        CHECK(labels_of(r.black) == labels_of(base.black));
    }
}

TEST_CASE("the three pruning steps of the figure example") {
    const auto f = fixtures::exprun();
    const auto r1 = prune_white(f, 1);
    CHECK(r1.step.after.to_string() == "(0,(6,1,1),(2,2,1,3))");
    CHECK(r1.step.host == 1);
    CHECK(r1.step.perimeter == 1);
    CHECK(check_invariants(r1.result) == "");
    const auto r2 = prune_black(r1.result, 3);
    CHECK(r2.result.type.to_string() == "(0,(5,1,1),(2,2,3))");
    CHECK(check_invariants(r2.result) == "");
    const auto r3 = prune_black(r2.result, 2);
    CHECK(r3.result.type.to_string() == "(0,(3,1,1),(2,3))");
    CHECK(is_bi_pruned(r3.result));
    CHECK(check_invariants(r3.result) == "");
}

TEST_CASE("prune errors and the empty terminal") {
    const auto f = fixtures::exsym();
    CHECK_THROWS_AS(prune_white(f, 1), std::invalid_argument);  // not a loop face
    const auto r = prune_black(f, 3);
    CHECK(r.result.type.to_string() == "(0,(2,1),(2,1))");
    CHECK(check_invariants(r.result) == "");

    const auto ga = enumerate_factorizations(FactorizationType{0, {2}, {2}}).front();
    const auto e = prune_white(ga, 1);
    CHECK(e.step.to_empty);
    CHECK(e.result.empty());

    // the only transposition lies inside the white face
    const auto deg = fixtures::make(0, 2, "(1 2)", {1, 1}, {"(1 2)"}, "(1)(2)", {1, 2});
    REQUIRE(check_invariants(deg) == "");
    CHECK(is_degenerate_white(deg, 1));
    CHECK_THROWS_AS(prune_white(deg, 1), std::domain_error);
}

TEST_CASE("full prune of the figure example") {
    const auto f = fixtures::exprun();
    const auto tr = full_prune(f);
    CHECK(tr.terminal.type.to_string() == "(0,(3,1,1),(2,3))");
    CHECK(tr.steps.size() == 3);
    CHECK(tr.I == std::vector<int>{2, 3, 4});
    CHECK(tr.J == std::vector<int>{1, 4});
    CHECK(tr.recovered.check() == "");
    REQUIRE(tr.recovered.steps.size() == 3);
    const auto ct = combinatorial_type(tr.recovered);
    CHECK(ct.white == std::set<std::tuple<int, int, int>>{{1, 1, 1}});
    CHECK(ct.black == std::set<std::tuple<int, int, int>>{{2, 3, 1}, {2, 2, 2}});
    // replaying the recovered sequence ends at the original type
    const auto states = tr.recovered.states();
    CHECK(states.front().mu() == Partition{3, 1, 1});
    CHECK(states.back().mu() == f.type.mu);
    CHECK(states.back().nu() == f.type.nu);

    const auto fa = first_appearance(tr.recovered);
    CHECK(fa.mu_S.at(1) == 1);
    CHECK(fa.mu_S.at(2) == 3);
    CHECK(fa.nu_S.at(1) == 2);
    CHECK(fa.nu_S.at(3) == 1);

    REQUIRE(tr.forests.size() == 2);
    for (const auto& hf : tr.forests) {
        CHECK(hf.feasible());
        if (hf.host_color == Color::white) {
            CHECK(hf.host_label == 2);
            CHECK(hf.perimeter == 3);
            CHECK(hf.guests.size() == 2);
            CHECK(hf.edges == std::vector<std::pair<int, int>>{{4, 1}, {5, 1}});
        } else {
            CHECK(hf.host_label == 1);
            CHECK(hf.perimeter == 2);
            CHECK(hf.edges == std::vector<std::pair<int, int>>{{3, 2}});
        }
    }
    for (auto kind : {PolicyKind::random, PolicyKind::alternating}) {
        const auto other = full_prune(f, PrunePolicy{kind, 5});
        CHECK(canonical_form(other.terminal).key == canonical_form(tr.terminal).key);
        CHECK(combinatorial_type(other.recovered) == ct);
    }
}

TEST_CASE("full prune of bi-pruned input is the identity") {
    const auto f = fixtures::exsym2();
    const auto tr = full_prune(f);
    CHECK(tr.steps.empty());
    CHECK(tr.terminal == f);
    CHECK(tr.recovered.steps.empty());
}

TEST_CASE("full prune to the empty galaxy") {
    // every (0,(a),(b,c)) galaxy prunes away
    for_each_factorization(FactorizationType{0, {3}, {1, 2}}, {}, [](const LabeledFactorization& f) {
        const auto tr = full_prune(f);
        CHECK(tr.terminal.empty());
        REQUIRE(tr.empty_via.has_value());
        CHECK(tr.empty_via->white_label == 1);
        CHECK(tr.recovered.check() == "");
    });
}

TEST_CASE("policies are deterministic for a fixed seed") {
    const auto f = fixtures::exprun();
    const auto a = full_prune(f, PrunePolicy{PolicyKind::random, 42});
    const auto b = full_prune(f, PrunePolicy{PolicyKind::random, 42});
    CHECK(a.recovered.steps == b.recovered.steps);
    CHECK(to_string(PrunePolicy{PolicyKind::random, 42}) == "random(42)");
}

TEST_CASE("pruning commutes with conjugation") {
    std::mt19937_64 rng(5);
    for_each_factorization(FactorizationType{0, {2, 1, 1}, {2, 2}}, {}, [&](const LabeledFactorization& f) {
        const auto c = conjugate(f, random_permutation(4, rng));
        const auto a = full_prune(f), b = full_prune(c);
        CHECK(a.terminal.empty() == b.terminal.empty());
        if (!a.terminal.empty())
            CHECK(canonical_form(a.terminal).key == canonical_form(b.terminal).key);
        CHECK(combinatorial_type(a.recovered) == combinatorial_type(b.recovered));
    });
}

TEST_CASE("fiber statistics") {
    const FactorizationType t{0, {2, 1}, {1, 1, 1}};
    const auto cells = fiber_statistics(t);
    Rational mass = 0;
    int bipruned_cells = 0;
    for (const auto& c : cells) {
        mass += c.value / c.terminal_aut;
        CHECK(c.value == Rational(sequence_multiplicity(c.sequence, 0)));
        if (c.terminal_type == FactorizationType{0, {1, 1}, {1, 1}} && c.I == std::vector<int>{1, 2}) {
            ++bipruned_cells;
            CHECK(c.J.size() == 2);
            CHECK(c.value == 3);
        }
        if (c.sequence.steps.empty())
            CHECK(c.value == 1);
    }
    CHECK(bipruned_cells > 0);
    CHECK(mass == hurwitz_number(t, Kind::plain).value);

    // scaled-down analog of the figure example
    const FactorizationType s{0, {1, 3, 1}, {2, 1, 2}};
    Rational m2 = 0;
    for (const auto& c : fiber_statistics(s)) {
        CHECK(c.value == Rational(sequence_multiplicity(c.sequence, 0)));
        m2 += c.value / c.terminal_aut;
    }
    CHECK(m2 == hurwitz_number(s, Kind::plain).value);
}

TEST_CASE("fiber statistics reduction matches the full enumeration") {
    // sigma_1 fixed to the representative versus all of F, on a small type
    const FactorizationType t{0, {2, 1, 1}, {2, 2}};
    std::map<std::vector<int>, BigInt> all;
    for_each_factorization(t, {}, [&](const LabeledFactorization& f) {
        const auto tr = full_prune(f);
        auto key = tr.terminal.empty() ? std::vector<int>{-1} : canonical_form(tr.terminal).key;
        for (const auto& [k, l, s] : combinatorial_type(tr.recovered).white)
            key.insert(key.end(), {-2, k, l, s});
        for (const auto& [k, l, s] : combinatorial_type(tr.recovered).black)
            key.insert(key.end(), {-3, k, l, s});
        all[key] += 1;
    });
    BigInt total = 0;
    for (const auto& [k, v] : all)
        total += v;
    Rational mass = 0;
    for (const auto& c : fiber_statistics(t))
        mass += c.value / c.terminal_aut;
    CHECK(Rational(total) / 24 == mass);
}
