#include "hurwitz/correspondence.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "hurwitz/cache.hpp"
#include "hurwitz/galaxy.hpp"

namespace hurwitz {

ValueOracle engine_oracle(Kind kind, const EngineConfig& config, ResultCache* cache) {
    auto memo = std::make_shared<std::map<FactorizationType, Rational>>();
    return [=](const FactorizationType& t) {
        auto it = memo->find(t);
        if (it != memo->end())
            return it->second;
        const Rational v = hurwitz_number(t, kind, config, cache).value;
        memo->emplace(t, v);
        return v;
    };
}

namespace {

// the first summand, with `weight` giving hat (or Ph) of the smaller type;
// skip_identity leaves out (mu', nu') = (mu, nu) with full index sets
template <class Weight>
Rational first_summand(const FactorizationType& type, Weight&& weight, bool skip_identity,
                       std::vector<CorrespondenceCell>* cells) {
    Rational total = 0;
    for (const auto& pp : enumerate_preceding_pairs(type.mu, type.nu)) {
        const FactorizationType small{type.genus, pp.mu_p, pp.nu_p};
        if (small.branch_points() < 0)
            continue;
        const bool identity = pp.mu_p == type.mu && pp.nu_p == type.nu &&
                              pp.mu_p.length() == type.mu.length() &&
                              pp.nu_p.length() == type.nu.length();
        if (identity && skip_identity)
            continue;
        const auto classes = enumerate_gluing_classes(pp.mu_p, pp.nu_p, pp.I, pp.J, type.mu, type.nu);
        if (classes.empty())
            continue;
        const Rational w = weight(small);
        for (const auto& cl : classes) {
            const BigInt m = sequence_multiplicity(cl.canonical, type.genus);
            total += w * m;
            if (cells) {
                CorrespondenceCell c;
                c.mu_p = pp.mu_p;
                c.nu_p = pp.nu_p;
                c.I = pp.I;
                c.J = pp.J;
                c.type = cl.type;
                c.sequence = cl.canonical;
                c.hat = w;
                c.multiplicity = m;
                c.contribution = w * m;
                cells->push_back(std::move(c));
            }
        }
    }
    return total;
}

Rational correction_summand(const FactorizationType& type, std::vector<CorrespondenceCell>* cells) {
    Rational total = 0;
    if (type.genus != 0)
        return total;
    for (int j = 1; j <= type.nu.length(); ++j)
        for (int a = 1; a <= std::min(type.mu.part(1), type.nu.part(j)); ++a) {
            const Partition pa{a};
            for (const auto& cl : enumerate_gluing_classes(pa, pa, {1}, {j}, type.mu, type.nu)) {
                const BigInt m = sequence_multiplicity(cl.canonical, 0);
                total += m;
                if (cells) {
                    CorrespondenceCell c;
                    c.mu_p = pa;
                    c.nu_p = pa;
                    c.I = {1};
                    c.J = {j};
                    c.type = cl.type;
                    c.sequence = cl.canonical;
                    c.hat = 1;
                    c.multiplicity = m;
                    c.contribution = Rational(m);
                    c.correction = true;
                    cells->push_back(std::move(c));
                }
            }
        }
    return total;
}

}  // namespace

CorrespondenceReport rhs_main_theorem(const FactorizationType& type, const ValueOracle& hat_oracle,
                                      const ValueOracle& ph_oracle) {
    type.validate();
    if (type.mu.length() + type.nu.length() == 2)
        throw std::invalid_argument("the correspondence excludes l(mu) + l(nu) = 2");
    if (!hat_oracle)
        throw std::invalid_argument("missing hat oracle");
    CorrespondenceReport r;
    r.type = type;
    r.first_sum = first_summand(type, hat_oracle, false, &r.cells);
    r.delta_term = correction_summand(type, &r.cells);
    r.rhs = r.first_sum + r.delta_term;
    if (ph_oracle) {
        for (auto& c : r.cells)
            if (!c.correction)
                c.ph = ph_oracle(FactorizationType{type.genus, c.mu_p, c.nu_p});
        r.ph_weighted_rhs = first_summand(type, ph_oracle, false, nullptr) + r.delta_term;
    }
    return r;
}

CorrespondenceReport verify_type(const FactorizationType& type, const EngineConfig& config,
                                 ResultCache* cache, const VerifyOptions& opts) {
    auto hat = engine_oracle(Kind::bipruned_hat, config, cache);
    auto ph = opts.ph_diagnostics ? engine_oracle(Kind::bipruned, config, cache) : nullptr;
    CorrespondenceReport r = rhs_main_theorem(type, hat, ph);
    r.lhs = hurwitz_number(type, Kind::plain, config, cache).value;
    r.diff = *r.lhs - r.rhs;
    r.equal = r.diff == 0;
    if (opts.empty_mass && type.genus == 0 && type.degree() <= config.max_degree) {
        Rational mass = 0;
        for (const auto& c : fiber_statistics(type, config))
            if (c.empty_terminal)
                mass += c.value / c.terminal_aut;
        r.empty_terminal_mass = mass;
    }
    return r;
}

std::vector<CorrespondenceReport> verify_main_theorem(const std::vector<FactorizationType>& grid,
                                                      const EngineConfig& config, ResultCache* cache,
                                                      const VerifyOptions& opts) {
    std::vector<CorrespondenceReport> out;
    for (const auto& t : grid)
        out.push_back(verify_type(t, config, cache, opts));
    return out;
}

std::vector<FactorizationType> type_grid(int max_d, int max_g, int max_b, bool exclude_two) {
    std::vector<FactorizationType> out;
    for (int g = 0; g <= max_g; ++g)
        for (int d = 1; d <= max_d; ++d) {
            const auto comps = compositions(d);
            for (const auto& mu : comps)
                for (const auto& nu : comps) {
                    FactorizationType t{g, mu, nu};
                    const int b = t.branch_points();
                    if (b < 0 || b > max_b)
                        continue;
                    if (exclude_two && mu.length() + nu.length() == 2)
                        continue;
                    out.push_back(t);
                }
        }
    return out;
}

std::map<FactorizationType, Rational> solve_for_hat(
    const std::map<FactorizationType, Rational>& h_table, const ValueOracle& seed) {
    std::vector<FactorizationType> order;
    for (const auto& [t, v] : h_table)
        order.push_back(t);
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        const int la = a.mu.length() + a.nu.length(), lb = b.mu.length() + b.nu.length();
        return std::pair(a.degree(), la) < std::pair(b.degree(), lb);
    });
    std::map<FactorizationType, Rational> hat;
    auto lookup = [&](const FactorizationType& t) -> Rational {
        auto it = hat.find(t);
        if (it != hat.end())
            return it->second;
        if (t.mu.length() + t.nu.length() == 2 && seed) {
            const Rational v = seed(t);
            hat.emplace(t, v);
            return v;
        }
        throw std::out_of_range("solve_for_hat: missing dominated type " + t.to_string());
    };
    for (const auto& t : order) {
        if (t.mu.length() + t.nu.length() == 2) {
            if (seed)
                lookup(t);
            continue;
        }
        const Rational rest =
            first_summand(t, lookup, true, nullptr) + correction_summand(t, nullptr);
        hat[t] = h_table.at(t) - rest;
    }
    return hat;
}

}  // namespace hurwitz
