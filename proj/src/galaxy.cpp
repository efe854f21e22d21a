#include "hurwitz/galaxy.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hurwitz {

EtaSequence eta_sequence(const LabeledFactorization& f) {
    EtaSequence e{{f.sigma1.base}};
    for (const auto& t : f.taus)
        e.etas.push_back(compose(t, e.etas.back()));
    return e;
}

std::vector<Permutation> taus_from_etas(const EtaSequence& e) {
    std::vector<Permutation> out;
    for (std::size_t i = 1; i < e.etas.size(); ++i)
        out.push_back(compose(e.etas[i], e.etas[i - 1].inverse()));
    return out;
}

namespace {

std::vector<LoopFace> loops_of(const std::vector<std::vector<int>>& meets) {
    std::vector<LoopFace> out;
    for (std::size_t i = 0; i < meets.size(); ++i) {
        if (meets[i].size() > 1)
            continue;
        LoopFace lf{static_cast<int>(i) + 1, std::nullopt};
        if (!meets[i].empty())
            lf.transposition = meets[i].front();
        out.push_back(lf);
    }
    return out;
}

}  // namespace

LoopFaceReport loop_faces(const LabeledFactorization& f) {
    if (f.empty())
        return {};
    return {loops_of(white_meetings(f)), loops_of(black_meetings(f))};
}

bool is_degenerate_white(const LabeledFactorization& f, int i) {
    if (f.empty() || i < 1 || i > f.sigma1.num_labels())
        return false;
    const auto meets = white_meetings(f)[i - 1];
    if (meets.size() != 1)
        return false;
    auto [x, y] = f.taus[meets.front() - 1].transposed_pair();
    return f.sigma1.label_of[x] == i && f.sigma1.label_of[y] == i;
}

bool is_degenerate_black(const LabeledFactorization& f, int j) {
    return !f.empty() && is_degenerate_white(dual(f), j);
}

PruneResult prune_white(const LabeledFactorization& f, int i) {
    if (f.empty())
        throw std::invalid_argument("cannot prune the empty galaxy");
    if (i < 1 || i > f.type.mu.length())
        throw std::invalid_argument("white label out of range");
    const auto meets = white_meetings(f)[i - 1];
    if (meets.size() > 1)
        throw std::invalid_argument("white face " + std::to_string(i) + " is not a loop face");
    const int d = f.degree();
    const auto C = f.sigma1.support_of(i);
    std::vector<char> inC(d, 0);
    for (int x : C)
        inC[x] = 1;
    if (!meets.empty()) {
        auto [x, y] = f.taus[meets.front() - 1].transposed_pair();
        if (inC[x] && inC[y])
            throw std::domain_error("degenerate loop face: the meeting transposition lies inside it");
    }
    const int host = f.sigma2.label_of[C.front()];
    for (int x : C)
        if (f.sigma2.label_of[x] != host)
            throw std::logic_error("removed cycle is spread over several black faces");

    PruneStep step;
    step.color = Color::white;
    step.removed = i;
    step.host = host;
    step.perimeter = f.type.mu.part(i);
    step.before = f.type;

    if (meets.empty()) {
        // only the b = 0 galaxy G_a has a face meeting no transposition
        if (!f.taus.empty() || static_cast<int>(C.size()) != d)
            throw std::logic_error("face meeting no transposition outside G_a");
        step.to_empty = true;
        LabeledFactorization e = empty_factorization();
        step.after = e.type;
        return {std::move(e), step};
    }
    const int j = meets.front();
    step.branch_index = j;
    if (f.type.branch_points() - 1 < 0)
        throw std::invalid_argument("pruning would give a negative number of branch points");

    std::vector<int> newid(d, -1);
    int n = 0;
    for (int x = 0; x < d; ++x)
        if (!inC[x])
            newid[x] = n++;
    auto restrict = [&](const Permutation& p) {
        std::vector<int> im(n);
        for (int x = 0; x < d; ++x)
            if (!inC[x]) {
                if (inC[p(x)])
                    throw std::logic_error("permutation does not preserve the complement");
                im[newid[x]] = newid[p(x)];
            }
        return Permutation(std::move(im));
    };

    LabeledFactorization out;
    out.type = {f.type.genus, f.type.mu.without(i),
                f.type.nu.with_part(host, f.type.nu.part(host) - step.perimeter)};
    out.sigma1.base = restrict(f.sigma1.base);
    out.sigma1.label_of.resize(n);
    for (int x = 0; x < d; ++x)
        if (!inC[x]) {
            const int l = f.sigma1.label_of[x];
            out.sigma1.label_of[newid[x]] = l > i ? l - 1 : l;
        }
    for (int k = 1; k <= static_cast<int>(f.taus.size()); ++k)
        if (k != j)
            out.taus.push_back(restrict(f.taus[k - 1]));
    Permutation p = out.sigma1.base;
    for (const auto& t : out.taus)
        p = compose(t, p);
    // sigma_2 with the block C skipped must agree with the recomputed product
    std::vector<int> skip(n);
    for (int x = 0; x < d; ++x)
        if (!inC[x]) {
            int y = f.sigma2.base(x);
            while (inC[y])
                y = f.sigma2.base(y);
            skip[newid[x]] = newid[y];
        }
    if (p != Permutation(skip))
        throw std::logic_error("recomputed sigma_2 differs from the restricted one");
    out.sigma2.base = p;
    out.sigma2.label_of.resize(n);
    for (int x = 0; x < d; ++x)
        if (!inC[x])
            out.sigma2.label_of[newid[x]] = f.sigma2.label_of[x];
    step.after = out.type;
    if (auto err = check_invariants(out); !err.empty())
        throw std::logic_error("prune_white produced an invalid factorization: " + err);
    return {std::move(out), step};
}

PruneResult prune_black(const LabeledFactorization& f, int j) {
    if (f.empty())
        throw std::invalid_argument("cannot prune the empty galaxy");
    PruneResult r;
    try {
        r = prune_white(dual(f), j);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("black face " + std::to_string(j) + " is not a loop face");
    }
    r.result = dual(r.result);
    r.step.color = Color::black;
    r.step.before = f.type;
    r.step.after = r.result.empty() ? empty_factorization().type : r.result.type;
    if (r.step.branch_index > 0)
        r.step.branch_index = static_cast<int>(f.taus.size()) + 1 - r.step.branch_index;
    if (auto err = check_invariants(r.result); !err.empty())
        throw std::logic_error("prune_black produced an invalid factorization: " + err);
    return r;
}

std::string to_string(const PrunePolicy& p) {
    switch (p.kind) {
    case PolicyKind::first_available: return "first-available";
    case PolicyKind::random: return "random(" + std::to_string(p.seed) + ")";
    case PolicyKind::alternating: return "alternating-colors";
    }
    return "?";
}

std::vector<int> HostForest::valency() const {
    std::vector<int> a(perimeter + guests.size(), 0);
    for (const auto& [child, parent] : edges)
        if (parent >= 1 && parent <= static_cast<int>(a.size()))
            ++a[parent - 1];
    return a;
}

bool HostForest::feasible() const {
    const int n = perimeter + static_cast<int>(guests.size());
    if (static_cast<int>(edges.size()) != static_cast<int>(guests.size()))
        return false;
    UnionFind uf(n);
    for (const auto& [child, parent] : edges) {
        if (child <= perimeter || child > n || parent < 1 || parent > n)
            return false;
        if (!uf.unite(child - 1, parent - 1))
            return false;
    }
    for (int r = 0; r < perimeter; ++r)
        for (int s = r + 1; s < perimeter; ++s)
            if (uf.find(r) == uf.find(s))
                return false;
    return uf.components() == perimeter;
}

namespace {

struct FaceKey {
    Color color;
    int label;  // original
    auto operator<=>(const FaceKey&) const = default;
};

Color other(Color c) { return c == Color::white ? Color::black : Color::white; }

struct GuestRecord {
    FaceKey face;
    FaceKey host;
    int s = 0;
    int marker = -1;  // original element id, forwarded on deletion
    FaceKey neighbour;  // same-colour face at the shared branch point
    int segment = 0;    // resolved at the host's first appearance
};

class Pruner {
public:
    Pruner(const LabeledFactorization& f, const PrunePolicy& policy)
        : cur_(f), policy_(policy), rng_(policy.seed) {
        for (int i = 1; i <= f.type.mu.length(); ++i)
            worig_.push_back(i);
        for (int j = 1; j <= f.type.nu.length(); ++j)
            borig_.push_back(j);
        for (int x = 0; x < f.degree(); ++x)
            eorig_.push_back(x);
    }

    PruneTrace run(const LabeledFactorization& original) {
        PruneTrace trace;
        while (!cur_.empty()) {
            if (cur_.taus.empty()) {
                finish_via_empty(trace);
                break;
            }
            std::vector<std::pair<Color, int>> cand;
            bool any_loop = false;
            const auto rep = loop_faces(cur_);
            for (const auto& lf : rep.white) {
                any_loop = true;
                if (!is_degenerate_white(cur_, lf.label))
                    cand.emplace_back(Color::white, lf.label);
            }
            for (const auto& lf : rep.black) {
                any_loop = true;
                if (!is_degenerate_black(cur_, lf.label))
                    cand.emplace_back(Color::black, lf.label);
            }
            if (cand.empty()) {
                trace.degenerate_stop = any_loop;
                break;
            }
            // original white face 1 goes last
            if (cand.size() > 1) {
                std::erase_if(cand, [&](const auto& c) {
                    return c.first == Color::white && worig_[c.second - 1] == 1;
                });
            }
            const auto [color, label] = choose(cand, trace.steps.size());
            remove(color, label, trace);
        }
        if (!trace.empty_via) {
            trace.terminal = cur_;
            resolve_all();
            for (int v : worig_)
                trace.I.push_back(v);
            for (int v : borig_)
                trace.J.push_back(v);
        }
        build_sequence(original, trace);
        build_forests(trace);
        return trace;
    }

private:
    std::pair<Color, int> choose(const std::vector<std::pair<Color, int>>& cand, std::size_t step) {
        switch (policy_.kind) {
        case PolicyKind::first_available: return cand.front();
        case PolicyKind::random: {
            std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
            return cand[pick(rng_)];
        }
        case PolicyKind::alternating: {
            const Color want = step % 2 == 0 ? Color::white : Color::black;
            for (const auto& c : cand)
                if (c.first == want)
                    return c;
            return cand.front();
        }
        }
        return cand.front();
    }

    // In the oriented view F (cur for white, dual(cur) for black) the removed
    // face is the white cycle i and its host the sigma_2 cycle containing it.
    // Host boundaries are walked along F.sigma2, own boundaries along
    // F.sigma1^{-1}; both agree with the colour-swapped view of the other colour.
    void remove(Color color, int label, PruneTrace& trace) {
        const LabeledFactorization F = color == Color::white ? cur_ : dual(cur_);
        auto& self_orig = color == Color::white ? worig_ : borig_;
        auto& host_orig = color == Color::white ? borig_ : worig_;
        const auto C = F.sigma1.support_of(label);
        std::set<int> inC(C.begin(), C.end());
        const FaceKey face{color, self_orig[label - 1]};
        const int host_label = F.sigma2.label_of[C.front()];
        const FaceKey host{other(color), host_orig[host_label - 1]};

        record_cycle(face, C, F.sigma1.base.inverse());
        resolve(face);

        GuestRecord g;
        g.face = face;
        g.host = host;
        g.s = static_cast<int>(C.size());
        for (int z : C)
            if (!inC.count(F.sigma2.base(z)))
                g.marker = eorig_[F.sigma2.base(z)];
        const int j = white_meetings(F)[label - 1].front();
        auto [x, y] = F.taus[j - 1].transposed_pair();
        if (inC.count(y))
            std::swap(x, y);
        g.neighbour = {color, self_orig[F.sigma1.label_of[y] - 1]};
        // markers inside the removed block move to the element after it
        std::set<int> dead;
        for (int z : C)
            dead.insert(eorig_[z]);
        for (auto& r : guests_)
            if (dead.count(r.marker) && r.host == host)
                r.marker = g.marker;
        guests_.push_back(g);

        PruneResult res = color == Color::white ? prune_white(cur_, label) : prune_black(cur_, label);
        res.step.removed_original = face.label;
        res.step.host_original = host.label;
        trace.steps.push_back(res.step);
        self_orig.erase(self_orig.begin() + (label - 1));
        std::vector<int> kept;
        for (int z = 0; z < cur_.degree(); ++z)
            if (!inC.count(z))
                kept.push_back(eorig_[z]);
        eorig_ = std::move(kept);
        cur_ = std::move(res.result);
    }

    void finish_via_empty(PruneTrace& trace) {
        EmptyVia via{cur_.degree(), worig_.front(), borig_.front(), cur_};
        resolve_all();
        PruneResult res = prune_white(cur_, 1);
        res.step.removed_original = via.white_label;
        res.step.host_original = via.black_label;
        trace.steps.push_back(res.step);
        trace.I = {via.white_label};
        trace.J = {via.black_label};
        trace.empty_via = std::move(via);
        cur_ = std::move(res.result);
        trace.terminal = cur_;
    }

    void resolve_all() {
        for (int l = 1; l <= cur_.sigma1.num_labels(); ++l) {
            const FaceKey k{Color::white, worig_[l - 1]};
            record_cycle(k, cur_.sigma1.support_of(l), cur_.sigma1.base.inverse());
            resolve(k);
        }
        for (int l = 1; l <= cur_.sigma2.num_labels(); ++l) {
            const FaceKey k{Color::black, borig_[l - 1]};
            record_cycle(k, cur_.sigma2.support_of(l), cur_.sigma2.base);
            resolve(k);
        }
    }

    // boundary of a face at its first appearance, from its least original element
    void record_cycle(const FaceKey& k, const std::vector<int>& support, const Permutation& walk) {
        int start = support.front();
        for (int z : support)
            if (eorig_[z] < eorig_[start])
                start = z;
        std::vector<int> cyc;
        int z = start;
        do {
            cyc.push_back(eorig_[z]);
            z = walk(z);
        } while (z != start);
        cycles_[k] = std::move(cyc);
    }

    void resolve(const FaceKey& host) {
        const auto& cyc = cycles_.at(host);
        for (auto& r : guests_) {
            if (!(r.host == host))
                continue;
            auto it = std::find(cyc.begin(), cyc.end(), r.marker);
            r.segment = it == cyc.end() ? 0 : static_cast<int>(it - cyc.begin()) + 1;
        }
    }

    void build_sequence(const LabeledFactorization& original, PruneTrace& trace) {
        GluingSequence seq;
        seq.mu = original.type.mu;
        seq.nu = original.type.nu;
        if (trace.empty_via) {
            seq.start.white[trace.empty_via->white_label] = trace.empty_via->a;
            seq.start.black[trace.empty_via->black_label] = trace.empty_via->a;
        } else if (!trace.terminal.empty()) {
            for (std::size_t r = 0; r < trace.I.size(); ++r)
                seq.start.white[trace.I[r]] = trace.terminal.type.mu[r];
            for (std::size_t r = 0; r < trace.J.size(); ++r)
                seq.start.black[trace.J[r]] = trace.terminal.type.nu[r];
        }
        for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
            if (it->to_empty)
                continue;
            if (it->color == Color::white)
                seq.steps.push_back({Color::white, it->removed_original, it->host_original, it->perimeter});
            else
                seq.steps.push_back({Color::black, it->host_original, it->removed_original, it->perimeter});
        }
        if (!trace.degenerate_stop) {
            if (auto err = seq.check(); !err.empty())
                throw std::logic_error("recovered gluing sequence is invalid: " + err);
        }
        trace.recovered = std::move(seq);
    }

    void build_forests(PruneTrace& trace) {
        std::map<FaceKey, std::vector<const GuestRecord*>> by_host;
        // gluing order is the reverse of removal order
        for (auto it = guests_.rbegin(); it != guests_.rend(); ++it)
            by_host[it->host].push_back(&*it);
        for (const auto& [host, gs] : by_host) {
            HostForest hf;
            hf.host_color = host.color;
            hf.host_label = host.label;
            hf.perimeter = static_cast<int>(cycles_.count(host) ? cycles_.at(host).size() : 0);
            std::map<FaceKey, int> vertex;
            for (const auto* g : gs) {
                hf.guests.push_back(g->face.label);
                hf.guest_perimeters.push_back(g->s);
                vertex[g->face] = hf.perimeter + static_cast<int>(hf.guests.size());
            }
            for (const auto* g : gs) {
                auto it = vertex.find(g->neighbour);
                const int parent = it != vertex.end() ? it->second : g->segment;
                hf.edges.emplace_back(vertex[g->face], parent);
            }
            trace.forests.push_back(std::move(hf));
        }
    }

    LabeledFactorization cur_;
    PrunePolicy policy_;
    std::mt19937_64 rng_;
    std::vector<int> worig_, borig_, eorig_;
    std::vector<GuestRecord> guests_;
    std::map<FaceKey, std::vector<int>> cycles_;
};

}  // namespace

PruneTrace full_prune(const LabeledFactorization& f, const PrunePolicy& policy) {
    if (auto err = check_invariants(f); !err.empty())
        throw std::invalid_argument("full_prune: " + err);
    return Pruner(f, policy).run(f);
}

std::vector<FiberCell> fiber_statistics(const FactorizationType& type, const EngineConfig& config,
                                        const PrunePolicy& policy) {
    check_budget(type, config);
    using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>, CombinatorialType>;
    std::map<Key, FiberCell> cells;
    std::map<LabeledFactorization, CanonicalForm> canon_cache;
    auto canon = [&](const LabeledFactorization& t) -> const CanonicalForm& {
        auto it = canon_cache.find(t);
        if (it == canon_cache.end())
            it = canon_cache.emplace(t, canonical_form(t)).first;
        return it->second;
    };
    const LabeledCycles rep = block_representative(type.mu);
    for_each_factorization_from(type, rep, config, [&](const LabeledFactorization& f) {
        PruneTrace tr = full_prune(f, policy);
        const LabeledFactorization& term = tr.empty_via ? tr.empty_via->galaxy : tr.terminal;
        const CanonicalForm& cf = canon(term);
        const CombinatorialType ct = combinatorial_type(tr.recovered);
        Key key{cf.key, tr.I, tr.J, ct};
        auto it = cells.find(key);
        if (it == cells.end()) {
            FiberCell c;
            c.terminal_key = cf.key;
            c.I = tr.I;
            c.J = tr.J;
            c.type = ct;
            c.terminal_type = term.type;
            c.empty_terminal = tr.empty_via.has_value();
            c.terminal_aut = cf.stabilizer;
            c.count = 0;
            c.sequence = canonical_sequence(tr.recovered.start, ct, type.mu, type.nu);
            it = cells.emplace(key, std::move(c)).first;
        }
        it->second.count += 1;
    });
    BigInt prod_mu = 1;
    for (int v : type.mu.parts())
        prod_mu *= v;
    std::vector<FiberCell> out;
    for (auto& [k, c] : cells) {
        c.value = Rational(c.count * c.terminal_aut, prod_mu);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace hurwitz
