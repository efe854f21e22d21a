#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int d, int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= d || b >= d)
        throw std::invalid_argument("bad transposition");
    Permutation p = identity(d);
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

Permutation Permutation::from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(d);
    std::vector<char> used(d, 0);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            int x = c[i];
            if (x < 0 || x >= d || used[x])
                throw std::invalid_argument("bad cycle notation");
            used[x] = 1;
            p.images_[x] = c[(i + 1) % c.size()];
        }
    }
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
        inv[images_[x]] = static_cast<int>(x);
    Permutation r;
    r.images_ = std::move(inv);
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x))
            return false;
    return true;
}

bool Permutation::is_transposition() const {
    int moved = 0;
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x)) {
            ++moved;
            if (images_[images_[x]] != static_cast<int>(x))
                return false;
        }
    return moved == 2;
}

std::pair<int, int> Permutation::transposed_pair() const {
    int a = -1;
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x)) {
            if (a < 0)
                a = static_cast<int>(x);
            else
                return {a, static_cast<int>(x)};
        }
    throw std::logic_error("not a transposition");
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<int> c;
        int x = static_cast<int>(s);
        while (!seen[x]) {
            seen[x] = 1;
            c.push_back(x);
            x = images_[x];
        }
        out.push_back(std::move(c));
    }
    return out;
}

int Permutation::num_cycles() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::support() const {
    std::vector<int> s;
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x))
            s.push_back(static_cast<int>(x));
    return s;
}

std::string Permutation::to_cycle_string(bool with_fixed) const {
    std::string s;
    for (const auto& c : cycles()) {
        if (c.size() == 1 && !with_fixed)
            continue;
        s += "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i)
                s += " ";
            s += std::to_string(c[i] + 1);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("ground set mismatch in compose");
    std::vector<int> im(q.degree());
    for (int x = 0; x < q.degree(); ++x)
        im[x] = p(q(x));
    return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
    if (p.degree() != g.degree())
        throw std::invalid_argument("ground set mismatch in conjugate");
    std::vector<int> im(p.degree());
    for (int x = 0; x < p.degree(); ++x)
        im[g(x)] = g(p(x));
    return Permutation(std::move(im));
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<int> t;
    for (const auto& c : p.cycles())
        t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

UnionFind::UnionFind(int n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
        return false;
    parent_[a] = b;
    --components_;
    return true;
}

bool is_transitive(std::span<const Permutation> generators, int d) {
    if (d < 1)
        return false;
    UnionFind uf(d);
    for (const auto& g : generators) {
        if (g.degree() != d)
            throw std::invalid_argument("generator degree mismatch");
        for (int x = 0; x < d; ++x)
            uf.unite(x, g(x));
    }
    return uf.components() == 1;
}

Permutation random_permutation(int d, std::mt19937_64& rng) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    for (int i = d - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(im[i], im[pick(rng)]);
    }
    return Permutation(std::move(im));
}

Permutation parse_cycles(int d, const std::string& text) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> cur;
    bool open = false;
    std::string num;
    auto flush = [&] {
        if (!num.empty()) {
            cur.push_back(std::stoi(num) - 1);
            num.clear();
        }
    };
    for (char ch : text) {
        if (ch == '(') {
            if (open)
                throw std::invalid_argument("nested cycle");
            open = true;
        } else if (ch == ')') {
            flush();
            if (!open)
                throw std::invalid_argument("unbalanced cycle");
            open = false;
            if (!cur.empty())
                cycles.push_back(cur);
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            num += ch;
        } else if (ch == ' ' || ch == ',') {
            flush();
        } else {
            throw std::invalid_argument("bad cycle character");
        }
    }
    if (open)
        throw std::invalid_argument("unbalanced cycle");
    return Permutation::from_cycles(d, cycles);
}

int LabeledCycles::num_labels() const {
    int r = 0;
    for (int l : label_of)
        r = std::max(r, l);
    return r;
}

std::vector<int> LabeledCycles::support_of(int label) const {
    std::vector<int> s;
    for (std::size_t x = 0; x < label_of.size(); ++x)
        if (label_of[x] == label)
            s.push_back(static_cast<int>(x));
    return s;
}

Partition LabeledCycles::profile() const {
    std::vector<int> parts(num_labels(), 0);
    for (int l : label_of)
        ++parts[l - 1];
    return Partition(std::move(parts));
}

bool LabeledCycles::matches(const Partition& p) const {
    if (static_cast<int>(label_of.size()) != base.degree() || base.degree() != p.size())
        return false;
    // every cycle must carry one label and distinct cycles distinct labels
    std::vector<int> seen_label(p.length() + 1, 0);
    for (const auto& c : base.cycles()) {
        int l = label_of[c.front()];
        if (l < 1 || l > p.length() || seen_label[l])
            return false;
        seen_label[l] = 1;
        for (int x : c)
            if (label_of[x] != l)
                return false;
        if (static_cast<int>(c.size()) != p.part(l))
            return false;
    }
    return base.num_cycles() == p.length();
}

std::vector<LabeledCycles> admissible_labelings(const Permutation& p, const Partition& profile) {
    std::vector<LabeledCycles> out;
    const auto cyc = p.cycles();
    if (static_cast<int>(cyc.size()) != profile.length() || p.degree() != profile.size())
        return out;
    std::vector<int> assign(cyc.size(), 0);
    std::vector<char> used(profile.length() + 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cyc.size()) {
            LabeledCycles lc{p, std::vector<int>(p.degree(), 0)};
            for (std::size_t k = 0; k < cyc.size(); ++k)
                for (int x : cyc[k])
                    lc.label_of[x] = assign[k];
            out.push_back(std::move(lc));
            return;
        }
        for (int l = 1; l <= profile.length(); ++l) {
            if (used[l] || profile.part(l) != static_cast<int>(cyc[c].size()))
                continue;
            used[l] = 1;
            assign[c] = l;
            rec(c + 1);
            used[l] = 0;
        }
    };
    rec(0);
    return out;
}

LabeledCycles block_representative(const Partition& profile) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> labels(profile.size());
    int next = 0;
    for (int l = 1; l <= profile.length(); ++l) {
        std::vector<int> c;
        for (int k = 0; k < profile.part(l); ++k) {
            labels[next] = l;
            c.push_back(next++);
        }
        cycles.push_back(std::move(c));
    }
    return {Permutation::from_cycles(profile.size(), cycles), std::move(labels)};
}

LabeledCycles conjugate(const LabeledCycles& c, const Permutation& g) {
    LabeledCycles out{conjugate(c.base, g), std::vector<int>(c.label_of.size())};
    for (std::size_t x = 0; x < c.label_of.size(); ++x)
        out.label_of[g(static_cast<int>(x))] = c.label_of[x];
    return out;
}

}  // namespace hurwitz
