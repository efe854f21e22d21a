// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
// No result cache, every value is computed here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/chambers.hpp"
#include "hurwitz/correspondence.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string summary;
};

FactorizationType T(int g, Partition mu, Partition nu) { return {g, std::move(mu), std::move(nu)}; }

void expect(Outcome& o, const std::string& what, const Rational& got, const Rational& want) {
    if (got != want) {
        o.pass = false;
        o.detail << "    " << what << ": got " << to_string(got) << ", expected " << to_string(want) << "\n";
    }
}

Outcome reference_values() {
    Outcome o;
    auto v = [](int g, Partition mu, Partition nu, Kind k) { return hurwitz_number(T(g, mu, nu), k).value; };
    int checked = 0;
    auto check = [&](const std::string& what, const Rational& got, const Rational& want) {
        ++checked;
        expect(o, what, got, want);
    };
    check("h_0((2,2),(3,1))", v(0, {2, 2}, {3, 1}, Kind::plain), 12);
    check("Ph_0((2,2),(3,1))", v(0, {2, 2}, {3, 1}, Kind::bipruned), 2);
    check("PH_0((2,2),(3,1))", v(0, {2, 2}, {3, 1}, Kind::pruned), 2);
    check("h_0((2,1),(1,1,1))", v(0, {2, 1}, {1, 1, 1}, Kind::plain), 24);
    check("Ph_0((2,1),(1,1,1))", v(0, {2, 1}, {1, 1, 1}, Kind::bipruned), 6);
    check("PH_0((2,1),(1,1,1))", v(0, {2, 1}, {1, 1, 1}, Kind::pruned), 24);
    check("Ph_0((1,1),(1,1))", v(0, {1, 1}, {1, 1}, Kind::bipruned), 2);
    for (int a = 2; a <= 6; ++a)
        for (int b = 1; b < a; ++b) {
            const std::string t = "((" + std::to_string(a) + "),(" + std::to_string(b) + "," +
                                  std::to_string(a - b) + "))";
            check("h_0" + t, v(0, {a}, {b, a - b}, Kind::plain), 1);
            check("Ph_0" + t, v(0, {a}, {b, a - b}, Kind::bipruned), 0);
        }
    o.summary = std::to_string(checked) + " values";
    return o;
}

Outcome main_theorem() {
    Outcome o;
    const auto grid = type_grid(5, 1, 5);
    const auto reports = verify_main_theorem(grid);
    int bad = 0, g1 = 0, g1_ph = 0, g0 = 0, g0_mass = 0;
    for (const auto& r : reports) {
        if (!r.equal) {
            if (bad < 12)
                o.detail << "    " << r.type.to_string() << ": lhs " << to_string(*r.lhs) << ", rhs "
                         << to_string(r.rhs) << " (delta " << to_string(r.delta_term) << ")\n";
            ++bad;
        }
        if (r.type.genus == 1) {
            ++g1;
            g1_ph += r.ph_weighted_rhs && *r.ph_weighted_rhs == *r.lhs;
        } else {
            ++g0;
            g0_mass += r.empty_terminal_mass && r.first_sum + *r.empty_terminal_mass == *r.lhs;
        }
    }
    if (bad)
        o.pass = false;
    o.detail << "    diagnostics: genus 1 with Ph weights " << g1_ph << "/" << g1
             << " balance; genus 0 with empty-terminal mass for delta " << g0_mass << "/" << g0 << " balance\n";

    const auto ex = verify_type(T(0, {2, 1}, {1, 1, 1}));
    std::vector<std::string> mults;
    Rational identity = 0, glued = 0;
    for (const auto& c : ex.cells) {
        if (c.mu_p == ex.type.mu && c.nu_p == ex.type.nu) {
            identity += c.contribution;
            continue;
        }
        mults.push_back(to_string(Rational(c.multiplicity)));
        glued += Rational(c.multiplicity);
        if (c.hat != 2)
            o.pass = false;
    }
    const bool example = ex.equal && *ex.lhs == 24 && identity == 6 && glued == 9 && mults.size() == 3 &&
                         mults[0] == "3" && mults[1] == "3" && mults[2] == "3" && ex.delta_term == 0;
    if (!example)
        o.pass = false;
    o.detail << "    (0,(2,1),(1,1,1)): " << to_string(*ex.lhs) << " = " << to_string(identity) << " + 2*"
             << to_string(glued) << ", multiplicities";
    for (const auto& m : mults)
        o.detail << " " << m;
    o.detail << (example ? " (reproduced)\n" : " (NOT reproduced)\n");
    o.summary = std::to_string(reports.size() - bad) + "/" + std::to_string(reports.size()) +
                " types balance, worked example " + (example ? "ok" : "wrong");
    return o;
}

Outcome forest_fact() {
    Outcome o;
    const auto r = verify_forest_fact(7);
    o.pass = r.ok();
    for (const auto& m : r.mismatches)
        o.detail << "    spec n=" << m.spec.n() << " k=" << m.spec.k << ": formula " << m.formula << ", brute " << m.brute << "\n";
    o.summary = std::to_string(r.specs) + " specs, " + std::to_string(r.mismatches.size()) + " mismatches";
    return o;
}

Outcome fibers() {
    Outcome o;
    const auto r = verify_fibers(type_grid(5, 1, 5, false));
    o.pass = r.ok();
    for (const auto& m : r.mismatches)
        o.detail << "    " << m.type.to_string() << ": cell " << to_string(m.cell.value) << ", multiplicity "
                 << m.multiplicity << "\n";
    o.summary = std::to_string(r.types) + " types, " + std::to_string(r.cells) + " cells (" +
                std::to_string(r.empty_cells) + " empty), " + std::to_string(r.mismatches.size()) + " mismatches";
    return o;
}

Outcome pruning_order() {
    Outcome o;
    const auto r = verify_pruning_order(type_grid(5, 1, 5, false));
    o.pass = r.ok();
    for (const auto& m : r.mismatches)
        o.detail << "    " << m.type.to_string() << " " << m.factorization << "\n";
    o.summary = std::to_string(r.types) + " types, " + std::to_string(r.factorizations) + " factorizations, " +
                std::to_string(r.empty_terminals) + " empty terminals, " + std::to_string(r.mismatches.size()) +
                " mismatches";
    return o;
}

Outcome bijection() {
    Outcome o;
    const auto r = verify_bijection(type_grid(4, 1, 7, false), 10000, 7);
    o.pass = r.ok() && r.random_factorizations == 10000;
    for (const auto& f : r.failures)
        o.detail << "    " << f.what << " " << f.type.to_string() << " " << f.detail << "\n";
    o.summary = std::to_string(r.exhaustive_types) + " types exhaustively (" +
                std::to_string(r.exhaustive_factorizations) + " factorizations), " +
                std::to_string(r.random_factorizations) + " random, " + std::to_string(r.failures.size()) +
                " failures";
    return o;
}

Outcome chambers() {
    Outcome o;
    int runs = 0;
    auto run = [&](int g, int m, int n, Kind kind, int bound) {
        const auto rep = check_chamber_polynomiality(g, m, n, kind, bound);
        ++runs;
        const int fitted = rep.count(FitStatus::fitted);
        const bool ok = fitted == static_cast<int>(rep.chambers.size()) && !rep.chambers.empty();
        if (!ok)
            o.pass = false;
        int top = -1;
        for (const auto& c : rep.chambers)
            if (c.polynomial)
                top = std::max(top, c.polynomial->degree());
        o.detail << "    g=" << g << " m=" << m << " n=" << n << " " << to_string(kind) << " bound " << bound
                 << ": " << fitted << "/" << rep.chambers.size() << " chambers fitted, max degree " << top
                 << " (cap " << rep.degree_cap << ")" << (ok ? "" : "  <-- FAIL") << "\n";
        for (const auto& c : rep.chambers)
            if (c.status != FitStatus::fitted)
                o.detail << "      " << c.id.to_string() << " " << to_string(c.status) << "\n";
        return rep;
    };

    // the named chamber: mu = (a,b), nu = (c,d) with d > a, b > c
    const auto bi = run(0, 2, 2, Kind::bipruned, 10);
    const auto pl = run(0, 2, 2, Kind::plain, 10);
    const auto* cb = bi.find({2, 2}, {1, 3});
    const auto* cp = pl.find({2, 2}, {1, 3});
    const std::string fb = cb && cb->polynomial ? cb->polynomial->to_string() : "none";
    const std::string fp = cp && cp->polynomial ? cp->polynomial->to_string() : "none";
    if (fb != "2*nu1" || fp != "2*nu2" || cb->held_out == 0 || cp->held_out == 0)
        o.pass = false;
    o.detail << "    chamber d>a, b>c: bipruned " << fb << ", plain " << fp << "\n";

    for (int g = 0; g <= 1; ++g)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; m + n <= 4; ++n) {
                if (g == 0 && m + n < 3)
                    continue;  // cap -1 (m = n = 1) and no walls to speak of
                const int bound = g == 0 ? 10 : (m + n == 2 ? 12 : 9);
                for (Kind kind : {Kind::plain, Kind::pruned, Kind::bipruned}) {
                    if (g == 0 && m == 2 && n == 2 && kind != Kind::pruned)
                        continue;  // done above
                    run(g, m, n, kind, bound);
                }
            }
    o.summary = std::to_string(runs) + " (g,m,n,kind) runs, bipruned " + fb + ", plain " + fp;
    return o;
}

Outcome hat_consistency() {
    Outcome o;
    const auto r = verify_hat_consistency(type_grid(5, 1, 5), 6);
    o.pass = r.ok();
    for (const auto& m : r.mismatches)
        o.detail << "    " << m.type.to_string() << ": expected " << to_string(m.expected) << ", hat "
                 << to_string(m.actual) << "\n";
    o.summary = std::to_string(r.types) + " types, " + std::to_string(r.loop_types) + " ((a),(a)) types, " +
                std::to_string(r.mismatches.size()) + " mismatches";
    return o;
}

Outcome inversion() {
    Outcome o;
    SuiteOptions opts;
    opts.max_failures = 1000;
    const auto r = verify_inversion(type_grid(4, 1, 7, false), opts);
    o.pass = r.ok();
    int shown = 0;
    for (const auto& m : r.mismatches)
        if (shown++ < 12)
            o.detail << "    " << m.type.to_string() << ": direct " << to_string(m.expected) << ", recovered "
                     << to_string(m.actual) << "\n";
    o.summary = std::to_string(r.compared) + " types compared (table " + std::to_string(r.table_size) + "), " +
                std::to_string(r.mismatches.size()) + " mismatches";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"reference values", reference_values},    {"correspondence", main_theorem},
        {"forest fact", forest_fact},       {"fiber = multiplicity", fibers},
        {"pruning order", pruning_order},   {"bijection", bijection},
        {"chamber polynomiality", chambers}, {"hat consistency", hat_consistency},
        {"inversion", inversion},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.summary = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("criterion %zu %s: %s: %s [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.summary.c_str(), s);
        std::cout << o.detail.str() << std::flush;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
