// Counting path for hurwitz_number.
//
// sigma_1 is fixed to the block representative with its labels; every other
// labeled sigma_1 is a conjugate of it, and the centralizer that fixes all
// labels has order prod(mu_i). The filters do not look at sigma_2 labels, so
// each unlabeled solution carries prod_len m_len(nu)! labelings. Hence
//   |F_kind| = d!/prod(mu_i) * L2 * leaves,   value = L2 * leaves / prod(mu_i)
// and for orbits
//   hat = L2 * sum_leaves |Stab| / prod(mu_i)
// with Stab computed inside the label-preserving centralizer of sigma_1.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "hurwitz/cache.hpp"
#include "hurwitz/factorization.hpp"

namespace hurwitz {

namespace {

struct Tally {
    std::uint64_t plain = 0;
    std::uint64_t pruned = 0;
    std::uint64_t bi = 0;
    std::uint64_t stab_sum = 0;
    std::uint64_t nontrivial = 0;

    void add(const Tally& o) {
        plain += o.plain;
        pruned += o.pruned;
        bi += o.bi;
        stab_sum += o.stab_sum;
        nontrivial += o.nontrivial;
    }
};

struct Mode {
    bool white_filter = false;  // prune branches that cannot become white-pruned
    bool black = false;         // evaluate the black condition at leaves
    bool stabilizer = false;
    bool shortcut = false;      // plain-only: count the last transposition in closed form
};

struct Frame {
    std::vector<int> p, pinv, cyc, comp, meets;
    int ncyc = 0, ncomp = 0, need = 0;
};

class Search {
public:
    Search(const FactorizationType& type, Mode mode) : mode_(mode) {
        d_ = type.degree();
        b_ = type.branch_points();
        m_ = type.mu.length();
        const LabeledCycles rep = block_representative(type.mu);
        label_.resize(d_);
        for (int x = 0; x < d_; ++x)
            label_[x] = rep.label_of[x] - 1;
        int s = 0;
        for (int i = 0; i < m_; ++i) {
            start_.push_back(s);
            len_.push_back(type.mu[i]);
            s += type.mu[i];
        }
        target_hist_.assign(d_ + 1, 0);
        for (int v : type.nu.parts())
            ++target_hist_[v];
        target_cycles_ = type.nu.length();
        for (int x = 0; x < d_; ++x)
            for (int y = x + 1; y < d_; ++y)
                pairs_.emplace_back(x, y);

        frames_.resize(b_ + 1);
        Frame& f0 = frames_[0];
        f0.p = rep.base.images();
        f0.pinv = rep.base.inverse().images();
        f0.comp = label_;
        f0.ncomp = m_;
        f0.meets.assign(m_, 0);
        f0.need = 2 * m_;
        recount(f0);
        taus_.resize(b_);
        pis_.resize(b_);
    }

    // first-level pairs with index % workers == worker
    Tally run(int worker, int workers) {
        worker_ = worker;
        workers_ = workers;
        tally_ = {};
        dfs(0);
        return tally_;
    }

private:
    void recount(Frame& f) const {
        f.cyc.assign(d_, -1);
        f.ncyc = 0;
        for (int s = 0; s < d_; ++s) {
            if (f.cyc[s] >= 0)
                continue;
            for (int x = s; f.cyc[x] < 0; x = f.p[x])
                f.cyc[x] = f.ncyc;
            ++f.ncyc;
        }
    }

    void dfs(int depth) {
        const Frame& f = frames_[depth];
        const int left = b_ - depth;
        // depth-0 work that is not split by first pair belongs to worker 0
        if (left == 0) {
            if (depth > 0 || worker_ == 0)
                leaf(f);
            return;
        }
        if (left == 1 && mode_.shortcut) {
            if (depth > 0 || worker_ == 0)
                tally_.plain += last_step(f);
            return;
        }
        for (std::size_t e = 0; e < pairs_.size(); ++e) {
            if (depth == 0 && static_cast<int>(e % workers_) != worker_)
                continue;
            const auto [x, y] = pairs_[e];
            const bool same = f.cyc[x] == f.cyc[y];
            const int c2 = same ? f.ncyc + 1 : f.ncyc - 1;
            if (std::abs(target_cycles_ - c2) > left - 1)
                continue;
            const bool joins = f.comp[x] != f.comp[y];
            if (f.ncomp - (joins ? 1 : 0) - 1 > left - 1)
                continue;
            const int lx = label_[x], ly = label_[y];
            int need = f.need;
            if (mode_.white_filter) {
                if (f.meets[lx] < 2)
                    --need;
                if (ly != lx && f.meets[ly] < 2)
                    --need;
                if (need > 2 * (left - 1))
                    continue;
            }
            Frame& g = frames_[depth + 1];
            g.p = f.p;
            g.pinv = f.pinv;
            const int u = f.pinv[x], v = f.pinv[y];
            g.p[u] = y;
            g.p[v] = x;
            g.pinv[x] = v;
            g.pinv[y] = u;
            recount(g);
            g.comp = f.comp;
            g.ncomp = f.ncomp;
            if (joins) {
                const int from = f.comp[y], to = f.comp[x];
                for (int& c : g.comp)
                    if (c == from)
                        c = to;
                --g.ncomp;
            }
            g.meets = f.meets;
            ++g.meets[lx];
            if (ly != lx)
                ++g.meets[ly];
            g.need = need;
            taus_[depth] = {x, y};
            pis_[depth] = {u, v};
            dfs(depth + 1);
        }
    }

    // number of transpositions completing f to a valid leaf (plain count only)
    std::uint64_t last_step(const Frame& f) const {
        if (f.ncomp > 2)
            return 0;
        std::vector<int> clen(f.ncyc, 0), ccomp(f.ncyc, 0);
        for (int x = 0; x < d_; ++x) {
            ++clen[f.cyc[x]];
            ccomp[f.cyc[x]] = f.comp[x];
        }
        std::vector<int> diff(d_ + 1, 0);
        for (int l : clen)
            ++diff[l];
        int sum = 0;
        std::vector<int> nz;
        for (int l = 1; l <= d_; ++l) {
            diff[l] -= target_hist_[l];
            sum += diff[l];
            if (diff[l] != 0)
                nz.push_back(l);
        }
        if (sum == 1) {
            // join p + q -> p+q
            int p = 0, q = 0, r = 0;
            for (int l : nz) {
                if (diff[l] == -1 && !r)
                    r = l;
                else if (diff[l] == 2 && !p)
                    p = q = l;
                else if (diff[l] == 1 && !p)
                    p = l;
                else if (diff[l] == 1 && !q)
                    q = l;
                else
                    return 0;
            }
            if (!p || !q || !r || p + q != r)
                return 0;
            std::uint64_t count = 0;
            for (int a = 0; a < f.ncyc; ++a)
                for (int c = a + 1; c < f.ncyc; ++c) {
                    const bool ok = (clen[a] == p && clen[c] == q) || (clen[a] == q && clen[c] == p);
                    if (!ok)
                        continue;
                    if (f.ncomp == 2 && ccomp[a] == ccomp[c])
                        continue;
                    count += static_cast<std::uint64_t>(clen[a]) * clen[c];
                }
            return count;
        }
        if (sum == -1 && f.ncomp == 1) {
            // split L -> k + (L-k)
            int L = 0, k1 = 0, k2 = 0;
            for (int l : nz) {
                if (diff[l] == 1 && !L)
                    L = l;
                else if (diff[l] == -2 && !k1)
                    k1 = k2 = l;
                else if (diff[l] == -1 && !k1)
                    k1 = l;
                else if (diff[l] == -1 && !k2)
                    k2 = l;
                else
                    return 0;
            }
            if (!L || !k1 || !k2 || k1 + k2 != L)
                return 0;
            std::uint64_t cycles_of_len = 0;
            for (int l : clen)
                cycles_of_len += l == L;
            return cycles_of_len * (k1 == k2 ? L / 2 : L);
        }
        return 0;
    }

    void leaf(const Frame& f) {
        if (f.ncomp != 1 || f.ncyc != target_cycles_)
            return;
        std::vector<int> clen(f.ncyc, 0);
        for (int x = 0; x < d_; ++x)
            ++clen[f.cyc[x]];
        std::vector<int> hist(d_ + 1, 0);
        for (int l : clen)
            ++hist[l];
        if (hist != target_hist_)
            return;
        ++tally_.plain;
        for (int i = 0; i < m_; ++i)
            if (f.meets[i] < 2)
                return;
        ++tally_.pruned;
        if (!mode_.black)
            return;
        std::vector<int> cnt(f.ncyc, 0);
        for (int i = 0; i < b_; ++i) {
            const int cu = f.cyc[pis_[i].first], cv = f.cyc[pis_[i].second];
            ++cnt[cu];
            if (cv != cu)
                ++cnt[cv];
        }
        for (int c : cnt)
            if (c < 2)
                return;
        ++tally_.bi;
        if (mode_.stabilizer) {
            const std::uint64_t s = stabilizer(f);
            tally_.stab_sum += s;
            if (s > 1)
                ++tally_.nontrivial;
        }
    }

    // elements of prod <rotation of block i> commuting with every tau and
    // fixing every sigma_2 cycle setwise
    std::uint64_t stabilizer(const Frame& f) const {
        std::vector<int> e(m_, 0);
        std::uint64_t count = 0;
        auto g = [&](int x) {
            const int i = label_[x];
            return start_[i] + (x - start_[i] + e[i]) % len_[i];
        };
        while (true) {
            bool ok = true;
            for (int i = 0; i < b_ && ok; ++i) {
                const int gx = g(taus_[i].first), gy = g(taus_[i].second);
                ok = (gx == taus_[i].first && gy == taus_[i].second) ||
                     (gx == taus_[i].second && gy == taus_[i].first);
            }
            for (int x = 0; x < d_ && ok; ++x)
                ok = f.cyc[g(x)] == f.cyc[x];
            if (ok)
                ++count;
            int i = 0;
            while (i < m_ && ++e[i] == len_[i])
                e[i++] = 0;
            if (i == m_)
                break;
        }
        return count;
    }

    Mode mode_;
    int d_ = 0, b_ = 0, m_ = 0, target_cycles_ = 0;
    std::vector<int> label_, start_, len_, target_hist_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<Frame> frames_;
    std::vector<std::pair<int, int>> taus_, pis_;
    Tally tally_;
    int worker_ = 0, workers_ = 1;
};

Tally run_search(const FactorizationType& type, Mode mode, int threads) {
    threads = std::max(1, threads);
    std::vector<Tally> parts(threads);
    if (threads == 1) {
        parts[0] = Search(type, mode).run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] { parts[t] = Search(type, mode).run(t, threads); });
        for (auto& th : pool)
            th.join();
    }
    Tally total;
    for (const auto& p : parts)
        total.add(p);
    return total;
}

struct Scale {
    BigInt sigma2_labelings = 1;
    BigInt prod_mu = 1;
    BigInt d_fact = 1;
};

Scale scale_of(const FactorizationType& type) {
    Scale s;
    std::vector<int> mult(type.degree() + 1, 0);
    for (int v : type.nu.parts())
        ++mult[v];
    for (int m : mult)
        s.sigma2_labelings *= factorial(m);
    for (int v : type.mu.parts())
        s.prod_mu *= v;
    s.d_fact = factorial(type.degree());
    return s;
}

HurwitzValue make_value(Kind kind, const FactorizationType& type, std::uint64_t leaves,
                        std::uint64_t nontrivial, const Scale& s) {
    HurwitzValue v;
    v.kind = kind;
    v.type = type;
    v.nontrivial_stabilizers = nontrivial;
    const BigInt weighted = BigInt(leaves) * s.sigma2_labelings;
    if (kind == Kind::bipruned_hat) {
        if (weighted % s.prod_mu != 0)
            throw std::logic_error("orbit count is not integral for " + type.to_string());
        v.count = weighted / s.prod_mu;
        v.value = Rational(v.count);
    } else {
        v.value = Rational(weighted, s.prod_mu);
        v.count = weighted * s.d_fact / s.prod_mu;
    }
    return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

HurwitzValue hurwitz_number(const FactorizationType& type, Kind kind, const EngineConfig& config,
                            ResultCache* cache) {
    const auto t0 = std::chrono::steady_clock::now();
    type.validate();
    if (cache) {
        if (auto hit = cache->lookup(kind, type)) {
            HurwitzValue v;
            v.kind = kind;
            v.type = type;
            v.value = *hit;
            v.count = kind == Kind::bipruned_hat
                          ? BigInt(boost::multiprecision::numerator(*hit))
                          : BigInt(boost::multiprecision::numerator(Rational(*hit * factorial(type.degree()))));
            v.cache_hit = true;
            v.seconds = seconds_since(t0);
            return v;
        }
    }
    check_budget(type, config);
    Mode mode;
    switch (kind) {
    case Kind::plain: mode.shortcut = true; break;
    case Kind::pruned: mode.white_filter = true; break;
    case Kind::bipruned: mode.white_filter = mode.black = true; break;
    case Kind::bipruned_hat: mode.white_filter = mode.black = mode.stabilizer = true; break;
    }
    const Tally t = run_search(type, mode, config.threads);
    const Scale s = scale_of(type);
    HurwitzValue v;
    switch (kind) {
    case Kind::plain: v = make_value(kind, type, t.plain, 0, s); break;
    case Kind::pruned: v = make_value(kind, type, t.pruned, 0, s); break;
    case Kind::bipruned: v = make_value(kind, type, t.bi, 0, s); break;
    case Kind::bipruned_hat: v = make_value(kind, type, t.stab_sum, t.nontrivial, s); break;
    }
    v.seconds = seconds_since(t0);
    if (cache)
        cache->store(kind, type, v.value);
    return v;
}

AllKinds hurwitz_numbers(const FactorizationType& type, const EngineConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    check_budget(type, config);
    Mode mode;
    mode.black = mode.stabilizer = true;
    const Tally t = run_search(type, mode, config.threads);
    const Scale s = scale_of(type);
    AllKinds out{make_value(Kind::plain, type, t.plain, 0, s),
                 make_value(Kind::pruned, type, t.pruned, 0, s),
                 make_value(Kind::bipruned, type, t.bi, t.nontrivial, s),
                 make_value(Kind::bipruned_hat, type, t.stab_sum, t.nontrivial, s)};
    const double secs = seconds_since(t0);
    for (auto* v : {&out.plain, &out.pruned, &out.bipruned, &out.hat})
        v->seconds = secs;
    return out;
}

}  // namespace hurwitz
