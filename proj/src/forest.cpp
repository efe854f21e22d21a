#include "hurwitz/forest.hpp"

#include <stdexcept>
#include <string>

#include "hurwitz/permutation.hpp"

namespace hurwitz {

bool ForestSpec::valid() const {
    if (k < 1 || k > n())
        return false;
    int sum = 0;
    for (int v : a) {
        if (v < 0)
            return false;
        sum += v;
    }
    return sum == n() - k;
}

BigInt forest_count(const ForestSpec& spec) {
    if (!spec.valid())
        throw std::invalid_argument("invalid forest spec");
    const int n = spec.n();
    if (n == spec.k)
        return 1;
    BigInt total = 0;
    std::vector<int> lower = spec.a;
    for (int l = 0; l < spec.k; ++l) {
        --lower[l];
        total += multinomial(n - spec.k - 1, lower);
        ++lower[l];
    }
    return total;
}

namespace {

// Walks all (n-k)-edge subsets of K_n that form a forest with the roots
// separated; calls visit(edges, valency-vector a).
template <class Visit>
void walk_forests(int n, int k, Visit&& visit) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.emplace_back(u, v);
    const int need = n - k;
    std::vector<int> pick;
    auto check = [&] {
        UnionFind uf(n);
        for (int e : pick)
            if (!uf.unite(all[e].first, all[e].second))
                return;
        for (int r = 0; r < k; ++r)
            for (int s = r + 1; s < k; ++s)
                if (uf.find(r) == uf.find(s))
                    return;
        std::vector<int> val(n, 0);
        for (int e : pick) {
            ++val[all[e].first];
            ++val[all[e].second];
        }
        for (int v = k; v < n; ++v)
            --val[v];
        std::vector<std::pair<int, int>> edges;
        for (int e : pick)
            edges.emplace_back(all[e].first + 1, all[e].second + 1);
        visit(edges, val);
    };
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == need) {
            check();
            return;
        }
        const int left = need - static_cast<int>(pick.size());
        for (int e = start; e + left <= static_cast<int>(all.size()); ++e) {
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<LabeledForest> enumerate_forests(const ForestSpec& spec, const EngineConfig& config) {
    if (!spec.valid())
        throw std::invalid_argument("invalid forest spec");
    if (spec.n() > config.forest_oracle_bound)
        throw BudgetExceeded("forest oracle bound exceeded: n = " + std::to_string(spec.n()));
    std::vector<LabeledForest> out;
    walk_forests(spec.n(), spec.k, [&](const auto& edges, const std::vector<int>& val) {
        if (val == spec.a)
            out.push_back(LabeledForest{edges});
    });
    return out;
}

std::map<std::vector<int>, BigInt> tally_forests(int n, int k, const EngineConfig& config) {
    if (k < 1 || k > n)
        throw std::invalid_argument("invalid root count");
    if (n > config.forest_oracle_bound)
        throw BudgetExceeded("forest oracle bound exceeded: n = " + std::to_string(n));
    std::map<std::vector<int>, BigInt> out;
    walk_forests(n, k, [&](const auto&, const std::vector<int>& val) { out[val] += 1; });
    return out;
}

}  // namespace hurwitz
