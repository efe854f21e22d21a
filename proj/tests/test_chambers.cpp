#include <doctest.h>

#include "hurwitz/chambers.hpp"
#include "hurwitz/report.hpp"

using namespace hurwitz;

TEST_CASE("chamber forms and labels") {
    // m = n = 2: nonempty I, J other than (full, full)
    CHECK(chamber_forms(2, 2).size() == 8);
    CHECK(chamber_forms(1, 1).empty());
    const auto a = chamber_of({1, 5}, {2, 4});
    const auto b = chamber_of({5, 1}, {2, 4});
    CHECK(a != b);
    CHECK(a.to_string().size() == 8);
    CHECK(chamber_of({2, 4}, {1, 5}) == chamber_of({3, 5}, {1, 7}));
    CHECK_THROWS_AS(chamber_of({2, 2}, {2, 2}), OnWall);
    CHECK_THROWS_AS(chamber_of({1, 3}, {3, 1}), OnWall);
}

TEST_CASE("samples lie on the slice") {
    const auto pts = chamber_samples(2, 2, 4);
    CHECK_FALSE(pts.empty());
    for (const auto& [mu, nu] : pts) {
        CHECK(mu.size() == nu.size());
        for (int x : mu.parts())
            CHECK((x >= 1 && x <= 4));
    }
    CHECK(chamber_samples(1, 1, 5).size() == 5);
    CHECK(polynomiality_degree_cap(0, 2, 2) == 1);
    CHECK(polynomiality_degree_cap(1, 1, 1) == 3);
}

TEST_CASE("exact fits") {
    std::vector<SamplePoint> pts;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b < a; ++b)
            pts.push_back({Partition{a}, Partition{b, a - b}, 7});
    auto p = fit_polynomial(pts, 1);
    CHECK(p.degree() == 0);
    CHECK(p.to_string() == "7");

    for (auto& s : pts)
        s.value = 2 * s.nu[1];
    p = fit_polynomial(pts, 1);
    CHECK(p.to_string() == "2*nu2");
    CHECK(p.evaluate({9}, {4, 5}) == 10);

    // too few points for the degree 2 basis
    std::vector<SamplePoint> few(pts.begin(), pts.begin() + 2);
    try {
        fit_polynomial(few, 2);
        FAIL("expected a fit error");
    } catch (const FitError& e) {
        CHECK(e.reason == FitError::Reason::rank_deficient);
    }
    pts.push_back({Partition{3}, Partition{1, 2}, 100});
    try {
        fit_polynomial(pts, 1);
        FAIL("expected a fit error");
    } catch (const FitError& e) {
        CHECK(e.reason == FitError::Reason::inconsistent);
    }
    // mu_m is eliminated from the basis
    for (const auto& e : fit_basis(2, 2, 2))
        CHECK(e[1] == 0);
}

TEST_CASE("genus zero one by two") {
    const auto plain = check_chamber_polynomiality(0, 1, 2, Kind::plain, 8);
    CHECK_FALSE(plain.violated());
    CHECK(plain.count(FitStatus::fitted) == static_cast<int>(plain.chambers.size()));
    for (const auto& c : plain.chambers)
        CHECK(c.polynomial->to_string() == "1");
    const auto bi = check_chamber_polynomiality(0, 1, 2, Kind::bipruned, 8);
    for (const auto& c : bi.chambers)
        CHECK(c.polynomial->degree() == -1);
}

TEST_CASE("genus zero two by two, wall crossing") {
    const auto bi = check_chamber_polynomiality(0, 2, 2, Kind::bipruned, 8);
    CHECK_FALSE(bi.violated());
    CHECK(bi.count(FitStatus::fitted) == static_cast<int>(bi.chambers.size()));
    for (const auto& c : bi.chambers)
        CHECK(c.polynomial->degree() <= 1);
    const auto* c = bi.find({2, 2}, {1, 3});
    REQUIRE(c);
    CHECK(c->polynomial->to_string() == "2*nu1");

    const auto plain = check_chamber_polynomiality(0, 2, 2, Kind::plain, 8);
    CHECK_FALSE(plain.violated());
    const auto* p1 = plain.find({2, 2}, {1, 3});
    const auto* p2 = plain.find({2, 2}, {3, 1});
    REQUIRE(p1);
    REQUIRE(p2);
    CHECK(p1->polynomial->to_string() == "2*nu2");
    CHECK(p1->id != p2->id);
    CHECK(p1->polynomial->to_string() != p2->polynomial->to_string());
    CHECK_THROWS_AS(plain.find({2, 2}, {2, 2}), OnWall);

    const auto j = to_json(plain);
    CHECK(j.at("chambers").size() == plain.chambers.size());
    CHECK(report_envelope("chambers", true, j).at("schema_version") == kReportSchemaVersion);
    const auto csv = chamber_csv(plain);
    CHECK(std::count(csv.begin(), csv.end(), '\n') >= static_cast<long>(plain.chambers.size()));
}

TEST_CASE("degree budget") {
    EngineConfig cfg;
    cfg.max_branch_points = 1;
    CHECK_THROWS_AS(check_chamber_polynomiality(1, 1, 1, Kind::plain, 4, cfg), BudgetExceeded);
    CHECK_THROWS_AS(check_chamber_polynomiality(0, 0, 2, Kind::plain, 4), std::invalid_argument);
}
