#include "hurwitz/gluing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hurwitz {

std::string to_string(Color c) { return c == Color::white ? "white" : "black"; }

namespace {

Partition values_of(const std::map<int, int>& m) {
    std::vector<int> v;
    for (const auto& [label, value] : m)
        v.push_back(value);
    return Partition(std::move(v));
}

std::vector<int> keys_of(const std::map<int, int>& m) {
    std::vector<int> v;
    for (const auto& [label, value] : m)
        v.push_back(label);
    return v;
}

}  // namespace

Partition GluingState::mu() const { return values_of(white); }
Partition GluingState::nu() const { return values_of(black); }
std::vector<int> GluingState::I() const { return keys_of(white); }
std::vector<int> GluingState::J() const { return keys_of(black); }

GluingState make_state(const Partition& mu_p, const std::vector<int>& I, const Partition& nu_p,
                       const std::vector<int>& J) {
    if (static_cast<int>(I.size()) != mu_p.length() || static_cast<int>(J.size()) != nu_p.length())
        throw std::invalid_argument("index set length differs from partition length");
    GluingState s;
    for (std::size_t r = 0; r < I.size(); ++r)
        s.white[I[r]] = mu_p[r];
    for (std::size_t r = 0; r < J.size(); ++r)
        s.black[J[r]] = nu_p[r];
    return s;
}

GluingState apply_gluing_step(const GluingState& state, const GluingStep& step,
                              const Partition& mu, const Partition& nu) {
    GluingState out = state;
    if (step.s < 1)
        throw std::invalid_argument("gluing perimeter must be positive");
    if (step.color == Color::black) {
        if (!state.white.count(step.k))
            throw std::invalid_argument("black step: host white face not present");
        if (step.l < 1 || step.l > nu.length() || state.black.count(step.l))
            throw std::invalid_argument("black step: new black label invalid or present");
        if (step.s > nu.part(step.l))
            throw std::invalid_argument("black step: s exceeds nu_l");
        out.white[step.k] += step.s;
        out.black[step.l] = step.s;
    } else {
        if (!state.black.count(step.l))
            throw std::invalid_argument("white step: host black face not present");
        if (step.k < 1 || step.k > mu.length() || state.white.count(step.k))
            throw std::invalid_argument("white step: new white label invalid or present");
        if (step.s > mu.part(step.k))
            throw std::invalid_argument("white step: s exceeds mu_k");
        out.black[step.l] += step.s;
        out.white[step.k] = step.s;
    }
    return out;
}

std::vector<GluingState> GluingSequence::states() const {
    std::vector<GluingState> out{start};
    for (const auto& st : steps)
        out.push_back(apply_gluing_step(out.back(), st, mu, nu));
    return out;
}

std::string GluingSequence::check() const {
    try {
        const auto all = states();
        const GluingState& last = all.back();
        if (static_cast<int>(last.white.size()) != mu.length() ||
            static_cast<int>(last.black.size()) != nu.length())
            return "final index sets are not full";
        if (last.mu() != mu || last.nu() != nu)
            return "final state differs from the frame";
        for (const auto& s : all)
            for (const auto& [label, v] : s.white)
                if (v > mu.part(label))
                    return "intermediate white perimeter exceeds frame";
        for (const auto& s : all)
            for (const auto& [label, v] : s.black)
                if (v > nu.part(label))
                    return "intermediate black perimeter exceeds frame";
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

CombinatorialType combinatorial_type(const GluingSequence& s) {
    CombinatorialType t;
    for (const auto& st : s.steps)
        (st.color == Color::white ? t.white : t.black).emplace(st.k, st.l, st.s);
    return t;
}

FirstAppearance first_appearance(const GluingSequence& s) {
    FirstAppearance fa;
    fa.mu_S = s.start.white;
    fa.nu_S = s.start.black;
    for (const auto& st : s.steps) {
        if (st.color == Color::white)
            fa.mu_S[st.k] = st.s;
        else
            fa.nu_S[st.l] = st.s;
    }
    return fa;
}

bool precedes(const Partition& mu_p, const std::vector<int>& I, const Partition& mu) {
    if (mu_p.length() != static_cast<int>(I.size()))
        return false;
    if (!std::is_sorted(I.begin(), I.end()) ||
        std::adjacent_find(I.begin(), I.end()) != I.end())
        return false;
    for (std::size_t r = 0; r < I.size(); ++r) {
        if (I[r] < 1 || I[r] > mu.length())
            return false;
        if (mu_p[r] > mu.part(I[r]))
            return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> nonempty_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i))
                s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

// all vectors v with 1 <= v_r <= part(I_r)
std::vector<std::vector<int>> boxes(const Partition& p, const std::vector<int>& I) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(I.size(), 1);
    if (I.empty())
        return {{}};
    while (true) {
        out.push_back(cur);
        std::size_t r = 0;
        while (r < I.size() && ++cur[r] > p.part(I[r]))
            cur[r++] = 1;
        if (r == I.size())
            break;
    }
    return out;
}

int sum_of(const std::vector<int>& v) {
    int s = 0;
    for (int x : v)
        s += x;
    return s;
}

}  // namespace

std::vector<PrecedingPair> enumerate_preceding_pairs(const Partition& mu, const Partition& nu) {
    std::vector<PrecedingPair> out;
    for (const auto& I : nonempty_subsets(mu.length()))
        for (const auto& J : nonempty_subsets(nu.length())) {
            const auto bj = boxes(nu, J);
            for (const auto& a : boxes(mu, I))
                for (const auto& c : bj)
                    if (sum_of(a) == sum_of(c))
                        out.push_back({Partition(a), Partition(c), I, J});
        }
    std::sort(out.begin(), out.end());
    return out;
}

GluingSequence canonical_sequence(const GluingState& start, const CombinatorialType& type,
                                  const Partition& mu, const Partition& nu) {
    std::vector<GluingStep> pending;
    for (const auto& [k, l, s] : type.white)
        pending.push_back({Color::white, k, l, s});
    for (const auto& [k, l, s] : type.black)
        pending.push_back({Color::black, k, l, s});
    std::sort(pending.begin(), pending.end());
    GluingSequence seq{mu, nu, start, {}};
    GluingState cur = start;
    while (!pending.empty()) {
        bool moved = false;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            const bool host_ok =
                it->color == Color::black ? cur.white.count(it->k) > 0 : cur.black.count(it->l) > 0;
            if (!host_ok)
                continue;
            cur = apply_gluing_step(cur, *it, mu, nu);
            seq.steps.push_back(*it);
            pending.erase(it);
            moved = true;
            break;
        }
        if (!moved)
            throw std::invalid_argument("combinatorial type admits no valid ordering");
    }
    if (auto err = seq.check(); !err.empty())
        throw std::invalid_argument("combinatorial type does not reach the frame: " + err);
    return seq;
}

std::vector<GluingClass> enumerate_gluing_classes(const Partition& mu_p, const Partition& nu_p,
                                                  const std::vector<int>& I,
                                                  const std::vector<int>& J, const Partition& mu,
                                                  const Partition& nu) {
    std::vector<GluingClass> out;
    if (!precedes(mu_p, I, mu) || !precedes(nu_p, J, nu) || mu_p.size() != nu_p.size())
        return out;
    const GluingState start = make_state(mu_p, I, nu_p, J);
    // new faces: white labels not in I, black labels not in J
    struct Node {
        Color color;
        int label;
    };
    std::vector<Node> nodes;
    for (int i = 1; i <= mu.length(); ++i)
        if (!start.white.count(i))
            nodes.push_back({Color::white, i});
    for (int j = 1; j <= nu.length(); ++j)
        if (!start.black.count(j))
            nodes.push_back({Color::black, j});
    const int n = static_cast<int>(nodes.size());
    // index of a face among new nodes, -1 for retained faces
    auto node_index = [&](Color c, int label) {
        for (int q = 0; q < n; ++q)
            if (nodes[q].color == c && nodes[q].label == label)
                return q;
        return -1;
    };
    std::vector<int> host(n, 0);  // host label of opposite colour
    std::function<void(int)> rec = [&](int q) {
        if (q < n) {
            const int choices = nodes[q].color == Color::white ? nu.length() : mu.length();
            for (int h = 1; h <= choices; ++h) {
                host[q] = h;
                rec(q + 1);
            }
            return;
        }
        // parent index among new nodes (-1 when the host is retained)
        std::vector<int> parent(n);
        for (int r = 0; r < n; ++r)
            parent[r] = node_index(nodes[r].color == Color::white ? Color::black : Color::white,
                                   host[r]);
        std::vector<int> depth(n, -1);
        for (int r = 0; r < n; ++r) {
            int x = r, steps = 0;
            while (x >= 0 && steps <= n) {
                x = parent[x];
                ++steps;
            }
            if (x >= 0)
                return;  // cycle
            depth[r] = steps;
        }
        std::vector<int> order(n);
        for (int r = 0; r < n; ++r)
            order[r] = r;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] > depth[b]; });
        std::vector<int> s(n, 0), guest_sum(n, 0);
        std::map<int, int> root_white, root_black;  // guest sums on retained faces
        for (int r : order) {
            const int fin = nodes[r].color == Color::white ? mu.part(nodes[r].label)
                                                           : nu.part(nodes[r].label);
            s[r] = fin - guest_sum[r];
            if (s[r] < 1)
                return;
            if (parent[r] >= 0)
                guest_sum[parent[r]] += s[r];
            else if (nodes[r].color == Color::white)
                root_black[host[r]] += s[r];
            else
                root_white[host[r]] += s[r];
        }
        for (const auto& [label, v] : start.white)
            if (v + (root_white.count(label) ? root_white[label] : 0) != mu.part(label))
                return;
        for (const auto& [label, v] : start.black)
            if (v + (root_black.count(label) ? root_black[label] : 0) != nu.part(label))
                return;
        CombinatorialType t;
        for (int r = 0; r < n; ++r) {
            if (nodes[r].color == Color::white)
                t.white.emplace(nodes[r].label, host[r], s[r]);
            else
                t.black.emplace(host[r], nodes[r].label, s[r]);
        }
        GluingSequence seq = canonical_sequence(start, t, mu, nu);
        FirstAppearance fa = first_appearance(seq);
        out.push_back({std::move(t), std::move(seq), std::move(fa)});
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const GluingClass& a, const GluingClass& b) { return a.type < b.type; });
    return out;
}

BigInt face_multiplicity_sum(int perimeter, const std::vector<int>& guest_perimeters) {
    const int m = static_cast<int>(guest_perimeters.size());
    if (m == 0)
        return 1;
    const int len = perimeter + m;
    std::vector<int> a(len, 0);
    BigInt total = 0;
    // all a >= 0 with |a| = m
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == len - 1) {
            a[pos] = left;
            BigInt weight = 1;
            for (int p = 0; p < m; ++p)
                weight *= power(BigInt(guest_perimeters[p]), a[perimeter + p]);
            for (int k = 0; k < perimeter; ++k) {
                --a[k];
                total += multinomial(m - 1, a) * weight;
                ++a[k];
            }
            return;
        }
        for (int v = 0; v <= left; ++v) {
            a[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, m);
    return total;
}

BigInt face_multiplicity(const GluingSequence& s, Color side, int label) {
    const FirstAppearance fa = first_appearance(s);
    std::vector<int> guests;
    for (const auto& st : s.steps) {
        if (side == Color::white && st.color == Color::black && st.k == label)
            guests.push_back(st.s);
        if (side == Color::black && st.color == Color::white && st.l == label)
            guests.push_back(st.s);
    }
    const int perimeter = side == Color::white ? fa.mu_S.at(label) : fa.nu_S.at(label);
    return face_multiplicity_sum(perimeter, guests);
}

BigInt sequence_multiplicity(const GluingSequence& s, int genus) {
    const int b = 2 * genus - 2 + s.mu.length() + s.nu.length();
    const int bp = 2 * genus - 2 + static_cast<int>(s.start.white.size() + s.start.black.size());
    BigInt result = binomial(b, bp) * factorial(static_cast<int>(s.steps.size()));
    for (int i = 1; i <= s.mu.length(); ++i)
        result *= face_multiplicity(s, Color::white, i);
    for (int j = 1; j <= s.nu.length(); ++j)
        result *= face_multiplicity(s, Color::black, j);
    return result;
}

}  // namespace hurwitz
