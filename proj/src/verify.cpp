#include "hurwitz/verify.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/canonical.hpp"

namespace hurwitz {

namespace {

std::string describe(const LabeledFactorization& f) {
    std::string s = "sigma1=" + f.sigma1.base.to_cycle_string() + " taus=";
    for (const auto& t : f.taus)
        s += t.to_cycle_string(false);
    s += " sigma2=" + f.sigma2.base.to_cycle_string();
    return s;
}

// valency vectors a in [0, total]^n with sum total
void for_each_valency(int n, int total, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> a(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            a[pos] = left;
            visit(a);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, total);
}

LabeledCycles shuffled_labels(const Permutation& p, std::mt19937_64& rng) {
    const auto cyc = p.cycles();
    std::vector<int> labels(cyc.size());
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    LabeledCycles out{p, std::vector<int>(p.degree(), 0)};
    for (std::size_t c = 0; c < cyc.size(); ++c)
        for (int x : cyc[c])
            out.label_of[x] = labels[c];
    return out;
}

}  // namespace

ForestFactResult verify_forest_fact(int max_n, const SuiteOptions& opts) {
    ForestFactResult r;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto tally = tally_forests(n, k, opts.config);
            for_each_valency(n, n - k, [&](const std::vector<int>& a) {
                const ForestSpec spec{k, a};
                ++r.specs;
                const BigInt formula = forest_count(spec);
                auto it = tally.find(a);
                const BigInt brute = it == tally.end() ? BigInt(0) : it->second;
                if (formula != brute && r.mismatches.size() < opts.max_failures)
                    r.mismatches.push_back({spec, formula, brute});
            });
        }
    return r;
}

PruningOrderResult verify_pruning_order(const std::vector<FactorizationType>& grid,
                                        const SuiteOptions& opts) {
    PruningOrderResult r;
    std::uint64_t index = 0;
    for (const auto& type : grid) {
        ++r.types;
        check_budget(type, opts.config);
        for_each_factorization_from(
            type, block_representative(type.mu), opts.config, [&](const LabeledFactorization& f) {
                ++r.factorizations;
                const PrunePolicy policies[] = {
                    {PolicyKind::first_available, 0},
                    {PolicyKind::random, opts.seed * 0x9e3779b97f4a7c15ULL + index++},
                    {PolicyKind::alternating, 0}};
                PruningMismatch m;
                m.type = type;
                bool differ = false;
                for (const auto& pol : policies) {
                    const PruneTrace tr = full_prune(f, pol);
                    std::vector<int> key;
                    if (!tr.terminal.empty())
                        key = canonical_form(tr.terminal).key;
                    if (tr.degenerate_stop)
                        key.insert(key.begin(), -1);  // never equal to a clean terminal
                    if (!m.keys.empty() && key != m.keys.front())
                        differ = true;
                    if (pol.kind == PolicyKind::first_available) {
                        r.empty_terminals += tr.terminal.empty();
                        r.degenerate_stops += tr.degenerate_stop;
                    }
                    m.policies.push_back(to_string(pol));
                    m.keys.push_back(std::move(key));
                }
                if (differ && r.mismatches.size() < opts.max_failures) {
                    m.factorization = describe(f);
                    r.mismatches.push_back(std::move(m));
                }
            });
    }
    return r;
}

FiberResult verify_fibers(const std::vector<FactorizationType>& grid, const SuiteOptions& opts) {
    FiberResult r;
    for (const auto& type : grid) {
        ++r.types;
        for (auto& cell : fiber_statistics(type, opts.config)) {
            ++r.cells;
            r.empty_cells += cell.empty_terminal;
            const BigInt m = sequence_multiplicity(cell.sequence, type.genus);
            if (cell.value != Rational(m) && r.mismatches.size() < opts.max_failures)
                r.mismatches.push_back({type, std::move(cell), m});
        }
    }
    return r;
}

LabeledFactorization random_factorization(int d, int b, std::mt19937_64& rng) {
    if (d < 1 || b < 0)
        throw std::invalid_argument("random_factorization: need d >= 1, b >= 0");
    if (d == 1 && b > 0)
        throw std::invalid_argument("random_factorization: no transpositions in S_1");
    std::uniform_int_distribution<int> point(0, d - 1);
    while (true) {
        const Permutation s1 = random_permutation(d, rng);
        std::vector<Permutation> taus;
        std::vector<Permutation> gens{s1};
        Permutation s2 = s1;
        for (int i = 0; i < b; ++i) {
            int x = point(rng), y = point(rng);
            while (y == x)
                y = point(rng);
            taus.push_back(Permutation::transposition(d, x, y));
            gens.push_back(taus.back());
            s2 = compose(taus.back(), s2);
        }
        if (!is_transitive(gens, d))
            continue;
        LabeledFactorization f;
        f.sigma1 = shuffled_labels(s1, rng);
        f.sigma2 = shuffled_labels(s2, rng);
        f.taus = std::move(taus);
        const int twice_g = b + 2 - f.sigma1.num_labels() - f.sigma2.num_labels();
        f.type = FactorizationType{twice_g / 2, f.sigma1.profile(), f.sigma2.profile()};
        return f;
    }
}

BijectionResult verify_bijection(const std::vector<FactorizationType>& grid, int random_count,
                                 int random_max_degree, const SuiteOptions& opts) {
    BijectionResult r;
    auto fail = [&](std::string what, const FactorizationType& t, std::string detail) {
        if (r.failures.size() < opts.max_failures)
            r.failures.push_back({std::move(what), t, std::move(detail)});
    };
    auto round_trip = [&](const LabeledFactorization& f) {
        const InvertedFactorization inv = to_inverted(f);
        if (auto e = check_invariants(inv); !e.empty())
            fail("inverted invariants: " + e, f.type, describe(f));
        const LabeledFactorization back = from_inverted(inv);
        if (back != f)
            fail("from_inverted(to_inverted(F)) != F", f.type, describe(f));
        if (to_inverted(back) != inv)
            fail("to_inverted(from_inverted(F_in)) != F_in", f.type, describe(f));
    };
    for (const auto& type : grid) {
        ++r.exhaustive_types;
        std::uint64_t forward = 0, inverted = 0;
        for_each_factorization(type, opts.config, [&](const LabeledFactorization& f) {
            ++forward;
            round_trip(f);
        });
        for_each_inverted_factorization(type, opts.config, [&](const InvertedFactorization& fi) {
            ++inverted;
            const LabeledFactorization f = from_inverted(fi);
            if (auto e = check_invariants(f); !e.empty())
                fail("from_inverted invariants: " + e, type, "");
            if (to_inverted(f) != fi)
                fail("to_inverted(from_inverted(F_in)) != F_in", type, describe(f));
        });
        r.exhaustive_factorizations += forward;
        if (forward != inverted)
            fail("|F| != |F_in|", type,
                 std::to_string(forward) + " vs " + std::to_string(inverted));
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> degree(1, std::max(1, random_max_degree));
    std::uniform_int_distribution<int> branch(0, 8);
    for (int i = 0; i < random_count; ++i) {
        const int d = degree(rng);
        const int b = d == 1 ? 0 : branch(rng);
        const LabeledFactorization f = random_factorization(d, b, rng);
        ++r.random_factorizations;
        if (auto e = check_invariants(f); !e.empty())
            fail("random factorization invariants: " + e, f.type, describe(f));
        round_trip(f);
    }
    return r;
}

InversionResult verify_inversion(const std::vector<FactorizationType>& grid, const SuiteOptions& opts,
                                 ResultCache* cache) {
    InversionResult r;
    std::map<FactorizationType, Rational> h;
    for (const auto& t : grid)
        h[t] = hurwitz_number(t, Kind::plain, opts.config, cache).value;
    r.table_size = static_cast<int>(h.size());
    auto hat = engine_oracle(Kind::bipruned_hat, opts.config, cache);
    const auto recovered = solve_for_hat(h, hat);
    for (const auto& t : grid) {
        if (t.mu.length() + t.nu.length() == 2)
            continue;  // seeded, not recovered
        ++r.compared;
        const Rational direct = hat(t);
        const Rational got = recovered.at(t);
        if (got != direct && r.mismatches.size() < opts.max_failures)
            r.mismatches.push_back({t, direct, got});
    }
    return r;
}

HatConsistencyResult verify_hat_consistency(const std::vector<FactorizationType>& grid, int max_a,
                                            const SuiteOptions& opts, ResultCache* cache) {
    HatConsistencyResult r;
    for (const auto& t : grid) {
        if (t.mu.length() + t.nu.length() == 2)
            continue;
        ++r.types;
        const Rational ph = hurwitz_number(t, Kind::bipruned, opts.config, cache).value;
        const Rational hat = hurwitz_number(t, Kind::bipruned_hat, opts.config, cache).value;
        if (ph != hat && r.mismatches.size() < opts.max_failures)
            r.mismatches.push_back({t, ph, hat});
    }
    EngineConfig cfg = opts.config;
    cfg.max_degree = std::max(cfg.max_degree, max_a);
    for (int a = 1; a <= max_a; ++a) {
        ++r.loop_types;
        const FactorizationType t{0, Partition{a}, Partition{a}};
        const Rational hat = hurwitz_number(t, Kind::bipruned_hat, cfg, cache).value;
        if (hat != 0 && r.mismatches.size() < opts.max_failures)
            r.mismatches.push_back({t, 0, hat});
    }
    return r;
}

}  // namespace hurwitz
