#pragma once

// Brute-force reference counts written against raw vectors only, so they share
// no code with the library engine.

#include <algorithm>
#include <numeric>
#include <vector>

#include "hurwitz/rational.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm mul(const Perm& p, const Perm& q) {  // p after q
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[i] = p[q[i]];
    return r;
}

inline std::vector<int> cycle_lengths(const Perm& p) {
    std::vector<int> seen(p.size(), 0), out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (int x = static_cast<int>(i); !seen[x]; x = p[x]) {
            seen[x] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

inline std::vector<std::vector<int>> cycles_of(const Perm& p) {
    std::vector<int> seen(p.size(), 0);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        out.emplace_back();
        for (int x = static_cast<int>(i); !seen[x]; x = p[x]) {
            seen[x] = 1;
            out.back().push_back(x);
        }
    }
    return out;
}

inline bool connected(const std::vector<Perm>& gens, int d) {
    std::vector<int> comp(d);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x)
            x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int i = 0; i < d; ++i)
            comp[find(i)] = find(g[i]);
    for (int i = 0; i < d; ++i)
        if (find(i) != find(0))
            return false;
    return true;
}

inline long labelings(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    long out = 1;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        for (std::size_t k = 2; k <= j - i; ++k)
            out *= static_cast<long>(k);
        i = j;
    }
    return out;
}

struct Counts {
    long plain = 0, pruned = 0, bipruned = 0;
};

// labeled factorizations of every kind, by brute force over S_d x T^b
inline Counts count(int g, std::vector<int> mu, std::vector<int> nu) {
    const int d = std::accumulate(mu.begin(), mu.end(), 0);
    const int b = 2 * g - 2 + static_cast<int>(mu.size() + nu.size());
    std::sort(mu.rbegin(), mu.rend());
    std::sort(nu.rbegin(), nu.rend());
    std::vector<Perm> trans;
    for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y) {
            Perm t(d);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[x], t[y]);
            trans.push_back(t);
        }
    Counts c;
    if (trans.empty() && b > 0)
        return c;
    const long lab = labelings(mu) * labelings(nu);
    Perm s1(d);
    std::iota(s1.begin(), s1.end(), 0);
    do {
        if (cycle_lengths(s1) != mu)
            continue;
        std::vector<int> idx(b, 0);
        while (true) {
            std::vector<Perm> taus;
            Perm s2 = s1;
            std::vector<Perm> etas{s1};
            for (int i = 0; i < b; ++i) {
                taus.push_back(trans[idx[i]]);
                s2 = mul(taus.back(), s2);
                etas.push_back(s2);
            }
            std::vector<Perm> gens = taus;
            gens.push_back(s1);
            if (cycle_lengths(s2) == nu && connected(gens, d)) {
                c.plain += lab;
                auto moved = [](const Perm& p, int x) { return p[x] != x; };
                bool white_ok = true;
                for (const auto& cyc : cycles_of(s1)) {
                    int meets = 0;
                    for (const auto& t : taus)
                        meets += std::any_of(cyc.begin(), cyc.end(), [&](int x) { return moved(t, x); });
                    white_ok = white_ok && meets >= 2;
                }
                bool black_ok = true;
                for (const auto& cyc : cycles_of(s2)) {
                    int meets = 0;
                    for (int i = 1; i <= b; ++i) {
                        // pi_i = eta_{i-1}^{-1} eta_i
                        Perm inv(d);
                        for (int x = 0; x < d; ++x)
                            inv[etas[i - 1][x]] = x;
                        const Perm pi = mul(inv, etas[i]);
                        meets += std::any_of(cyc.begin(), cyc.end(), [&](int x) { return moved(pi, x); });
                    }
                    black_ok = black_ok && meets >= 2;
                }
                if (white_ok)
                    c.pruned += lab;
                if (white_ok && black_ok)
                    c.bipruned += lab;
            }
            int k = 0;
            while (k < b && ++idx[k] == static_cast<int>(trans.size()))
                idx[k++] = 0;
            if (k == b)
                break;
        }
    } while (std::next_permutation(s1.begin(), s1.end()));
    return c;
}

inline hurwitz::Rational over_factorial(long n, int d) {
    return hurwitz::Rational(n) / hurwitz::Rational(hurwitz::factorial(d));
}

}  // namespace oracle
