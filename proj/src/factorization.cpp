#include "hurwitz/factorization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hurwitz {

void FactorizationType::validate() const {
    if (genus < 0)
        throw std::invalid_argument("negative genus");
    if (mu.size() != nu.size())
        throw std::invalid_argument("|mu| != |nu| in " + to_string());
    if (mu.size() < 1)
        throw std::invalid_argument("degree must be at least 1");
    if (branch_points() < 0)
        throw std::invalid_argument("negative number of branch points for " + to_string());
}

std::string FactorizationType::to_string() const {
    return "(" + std::to_string(genus) + "," + mu.to_string() + "," + nu.to_string() + ")";
}

LabeledFactorization empty_factorization() {
    LabeledFactorization f;
    f.type.genus = 0;
    return f;
}

std::string check_invariants(const LabeledFactorization& f) {
    if (f.empty())
        return f.taus.empty() ? "" : "empty galaxy with transpositions";
    try {
        f.type.validate();
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    const int d = f.type.degree();
    if (f.sigma1.base.degree() != d || f.sigma2.base.degree() != d)
        return "ground set size differs from |mu|";
    if (!f.sigma1.matches(f.type.mu))
        return "sigma1 labels do not match mu";
    if (!f.sigma2.matches(f.type.nu))
        return "sigma2 labels do not match nu";
    if (static_cast<int>(f.taus.size()) != f.type.branch_points())
        return "wrong number of transpositions";
    Permutation p = f.sigma1.base;
    std::vector<Permutation> gens{p};
    for (const auto& t : f.taus) {
        if (t.degree() != d || !t.is_transposition())
            return "tau is not a transposition";
        p = compose(t, p);
        gens.push_back(t);
    }
    if (p != f.sigma2.base)
        return "tau_b...tau_1 sigma_1 != sigma_2";
    if (!is_transitive(gens, d))
        return "not transitive";
    return "";
}

std::string check_invariants(const InvertedFactorization& f) {
    try {
        f.type.validate();
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    const int d = f.type.degree();
    if (f.sigma1.base.degree() != d || f.sigma2.base.degree() != d)
        return "ground set size differs from |mu|";
    if (!f.sigma1.matches(f.type.mu) || !f.sigma2.matches(f.type.nu))
        return "cycle labels do not match the profiles";
    if (static_cast<int>(f.pis.size()) != f.type.branch_points())
        return "wrong number of transpositions";
    Permutation p = f.sigma1.base;
    std::vector<Permutation> gens{p};
    for (const auto& t : f.pis) {
        if (t.degree() != d || !t.is_transposition())
            return "pi is not a transposition";
        p = compose(p, t);
        gens.push_back(t);
    }
    if (p != f.sigma2.base)
        return "sigma_1 pi_1...pi_b != sigma_2";
    if (!is_transitive(gens, d))
        return "not transitive";
    return "";
}

InvertedFactorization to_inverted(const LabeledFactorization& f) {
    InvertedFactorization out{f.type, f.sigma1, {}, f.sigma2};
    Permutation eta = f.sigma1.base;
    for (const auto& t : f.taus) {
        Permutation next = compose(t, eta);
        out.pis.push_back(compose(eta.inverse(), next));
        eta = std::move(next);
    }
    return out;
}

LabeledFactorization from_inverted(const InvertedFactorization& f) {
    LabeledFactorization out{f.type, f.sigma1, {}, f.sigma2};
    Permutation eta = f.sigma1.base;
    for (const auto& p : f.pis) {
        Permutation next = compose(eta, p);
        out.taus.push_back(compose(next, eta.inverse()));
        eta = std::move(next);
    }
    return out;
}

LabeledFactorization dual(const LabeledFactorization& f) {
    if (f.empty())
        return f;
    const InvertedFactorization inv = to_inverted(f);
    LabeledFactorization out;
    out.type = {f.type.genus, f.type.nu, f.type.mu};
    out.sigma1 = {f.sigma2.base.inverse(), f.sigma2.label_of};
    out.sigma2 = {f.sigma1.base.inverse(), f.sigma1.label_of};
    out.taus.assign(inv.pis.rbegin(), inv.pis.rend());
    return out;
}

LabeledFactorization conjugate(const LabeledFactorization& f, const Permutation& g) {
    LabeledFactorization out{f.type, conjugate(f.sigma1, g), {}, conjugate(f.sigma2, g)};
    for (const auto& t : f.taus)
        out.taus.push_back(conjugate(t, g));
    return out;
}

namespace {

std::vector<std::vector<int>> meetings(const LabeledCycles& cycles,
                                       const std::vector<Permutation>& ts) {
    std::vector<std::vector<int>> out(cycles.num_labels());
    for (std::size_t j = 0; j < ts.size(); ++j) {
        auto [x, y] = ts[j].transposed_pair();
        int lx = cycles.label_of[x], ly = cycles.label_of[y];
        out[lx - 1].push_back(static_cast<int>(j) + 1);
        if (ly != lx)
            out[ly - 1].push_back(static_cast<int>(j) + 1);
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> white_meetings(const LabeledFactorization& f) {
    return meetings(f.sigma1, f.taus);
}

std::vector<std::vector<int>> black_meetings(const LabeledFactorization& f) {
    return meetings(f.sigma2, to_inverted(f).pis);
}

bool is_pruned(const LabeledFactorization& f) {
    if (f.empty())
        return false;
    for (const auto& m : white_meetings(f))
        if (m.size() < 2)
            return false;
    return true;
}

bool is_bi_pruned(const LabeledFactorization& f) {
    if (!is_pruned(f))
        return false;
    for (const auto& m : black_meetings(f))
        if (m.size() < 2)
            return false;
    return true;
}

std::string to_string(Kind k) {
    switch (k) {
    case Kind::plain: return "plain";
    case Kind::pruned: return "pruned";
    case Kind::bipruned: return "bipruned";
    case Kind::bipruned_hat: return "bipruned_hat";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    if (s == "plain") return Kind::plain;
    if (s == "pruned") return Kind::pruned;
    if (s == "bipruned") return Kind::bipruned;
    if (s == "bipruned_hat" || s == "bipruned-hat" || s == "hat") return Kind::bipruned_hat;
    throw std::invalid_argument("unknown kind: " + s);
}

void check_budget(const FactorizationType& type, const EngineConfig& config) {
    type.validate();
    if (type.degree() > config.max_degree)
        throw BudgetExceeded("degree " + std::to_string(type.degree()) + " exceeds budget " +
                             std::to_string(config.max_degree));
    if (type.branch_points() > config.max_branch_points)
        throw BudgetExceeded("branch points " + std::to_string(type.branch_points()) +
                             " exceed budget " + std::to_string(config.max_branch_points));
}

namespace {

// all permutations with the cycle type of mu, increasing one-line order
std::vector<Permutation> all_with_type(const Partition& mu) {
    const int d = mu.size();
    const Permutation rep = block_representative(mu).base;
    std::set<Permutation> seen;
    std::vector<int> g(d);
    for (int i = 0; i < d; ++i)
        g[i] = i;
    do {
        seen.insert(conjugate(rep, Permutation(g)));
    } while (std::next_permutation(g.begin(), g.end()));
    return {seen.begin(), seen.end()};
}

// Small left-multiplication DFS shared by the streaming paths. right = true
// multiplies on the right (inverted factorizations).
template <class Leaf>
void transposition_dfs(const Permutation& start, int b, int target_cycles, bool right, Leaf&& leaf) {
    const int d = start.degree();
    std::vector<Permutation> chosen;
    auto rec = [&](auto&& self, const Permutation& p, UnionFind uf) -> void {
        const int depth = static_cast<int>(chosen.size());
        const int left = b - depth;
        const int c = p.num_cycles();
        if (left == 0) {
            if (c == target_cycles && uf.components() == 1)
                leaf(chosen, p);
            return;
        }
        const auto cyc = p.cycles();
        std::vector<int> id(d);
        for (std::size_t k = 0; k < cyc.size(); ++k)
            for (int x : cyc[k])
                id[x] = static_cast<int>(k);
        for (int x = 0; x < d; ++x)
            for (int y = x + 1; y < d; ++y) {
                const int c2 = id[x] == id[y] ? c + 1 : c - 1;
                if (std::abs(target_cycles - c2) > left - 1)
                    continue;
                UnionFind next = uf;
                next.unite(x, y);
                if (next.components() - 1 > left - 1)
                    continue;
                Permutation t = Permutation::transposition(d, x, y);
                chosen.push_back(t);
                self(self, right ? compose(p, t) : compose(t, p), next);
                chosen.pop_back();
            }
    };
    UnionFind uf(d);
    for (int x = 0; x < d; ++x)
        uf.unite(x, start(x));
    rec(rec, start, uf);
}

}  // namespace

void for_each_factorization(const FactorizationType& type, const EngineConfig& config,
                            const std::function<void(const LabeledFactorization&)>& visit) {
    check_budget(type, config);
    const auto target = type.nu.sorted_desc();
    for (const auto& s1 : all_with_type(type.mu)) {
        const auto labels1 = admissible_labelings(s1, type.mu);
        transposition_dfs(s1, type.branch_points(), type.nu.length(), false,
                          [&](const std::vector<Permutation>& taus, const Permutation& p) {
                              if (cycle_type(p) != target)
                                  return;
                              const auto labels2 = admissible_labelings(p, type.nu);
                              for (const auto& l1 : labels1)
                                  for (const auto& l2 : labels2)
                                      visit(LabeledFactorization{type, l1, taus, l2});
                          });
    }
}

void for_each_factorization_from(const FactorizationType& type, const LabeledCycles& sigma1,
                                 const EngineConfig& config,
                                 const std::function<void(const LabeledFactorization&)>& visit) {
    check_budget(type, config);
    if (!sigma1.matches(type.mu))
        throw std::invalid_argument("sigma1 does not match mu");
    const auto target = type.nu.sorted_desc();
    transposition_dfs(sigma1.base, type.branch_points(), type.nu.length(), false,
                      [&](const std::vector<Permutation>& taus, const Permutation& p) {
                          if (cycle_type(p) != target)
                              return;
                          for (const auto& l2 : admissible_labelings(p, type.nu))
                              visit(LabeledFactorization{type, sigma1, taus, l2});
                      });
}

std::vector<LabeledFactorization> enumerate_factorizations(const FactorizationType& type,
                                                           const EngineConfig& config) {
    std::vector<LabeledFactorization> out;
    for_each_factorization(type, config, [&](const LabeledFactorization& f) { out.push_back(f); });
    return out;
}

void for_each_inverted_factorization(const FactorizationType& type, const EngineConfig& config,
                                     const std::function<void(const InvertedFactorization&)>& visit) {
    check_budget(type, config);
    const auto target = type.nu.sorted_desc();
    for (const auto& s1 : all_with_type(type.mu)) {
        const auto labels1 = admissible_labelings(s1, type.mu);
        transposition_dfs(s1, type.branch_points(), type.nu.length(), true,
                          [&](const std::vector<Permutation>& pis, const Permutation& p) {
                              if (cycle_type(p) != target)
                                  return;
                              const auto labels2 = admissible_labelings(p, type.nu);
                              for (const auto& l1 : labels1)
                                  for (const auto& l2 : labels2)
                                      visit(InvertedFactorization{type, l1, pis, l2});
                          });
    }
}

}  // namespace hurwitz
