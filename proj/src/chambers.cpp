#include "hurwitz/chambers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace hurwitz {

std::vector<ChamberForm> chamber_forms(int m, int n) {
    std::vector<ChamberForm> out;
    for (int im = 1; im < (1 << m); ++im)
        for (int jm = 1; jm < (1 << n); ++jm) {
            if (im == (1 << m) - 1 && jm == (1 << n) - 1)
                continue;
            ChamberForm f;
            for (int i = 0; i < m; ++i)
                if (im >> i & 1)
                    f.I.push_back(i + 1);
            for (int j = 0; j < n; ++j)
                if (jm >> j & 1)
                    f.J.push_back(j + 1);
            out.push_back(std::move(f));
        }
    return out;
}

std::string ChamberId::to_string() const {
    std::string s;
    for (auto c : signs)
        s += c > 0 ? '+' : '-';
    return s;
}

ChamberId chamber_of(const Partition& mu, const Partition& nu) {
    if (mu.empty() || nu.empty() || mu.size() != nu.size())
        throw std::invalid_argument("chamber_of: need nonempty mu, nu with |mu| = |nu|");
    ChamberId id;
    for (const auto& f : chamber_forms(mu.length(), nu.length())) {
        long v = 0;
        for (int i : f.I)
            v += mu.part(i);
        for (int j : f.J)
            v -= nu.part(j);
        if (v == 0)
            throw OnWall("point " + mu.to_string() + nu.to_string() + " lies on a wall");
        id.signs.push_back(v > 0 ? 1 : -1);
    }
    return id;
}

namespace {

BigInt monomial_value(const std::vector<int>& e, const Partition& mu, const Partition& nu) {
    BigInt v = 1;
    const int m = mu.length();
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k])
            v *= power(BigInt(k < static_cast<std::size_t>(m) ? mu[k] : nu[k - m]), e[k]);
    return v;
}

std::string variable_name(int k, int m) {
    return k < m ? "mu" + std::to_string(k + 1) : "nu" + std::to_string(k - m + 1);
}

// incremental row echelon form for picking independent training rows
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    bool add(std::vector<Rational> row) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto p = pivots_[r];
            if (row[p] != 0) {
                const Rational f = row[p];
                for (std::size_t c = 0; c < cols_; ++c)
                    if (rows_[r][c] != 0)
                        row[c] -= f * rows_[r][c];
            }
        }
        auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
        if (it == row.end())
            return false;
        const std::size_t p = it - row.begin();
        const Rational inv = 1 / row[p];
        for (auto& x : row)
            x *= inv;
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        return true;
    }
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<Rational> basis_row(const std::vector<std::vector<int>>& basis, const Partition& mu,
                                const Partition& nu) {
    std::vector<Rational> row;
    row.reserve(basis.size());
    for (const auto& e : basis)
        row.emplace_back(monomial_value(e, mu, nu));
    return row;
}

}  // namespace

int ExactPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : coefficients)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Rational ExactPolynomial::evaluate(const Partition& mu, const Partition& nu) const {
    if (mu.length() != m || nu.length() != n)
        throw std::invalid_argument("ExactPolynomial::evaluate: arity mismatch");
    Rational v = 0;
    for (const auto& [e, c] : coefficients)
        v += c * monomial_value(e, mu, nu);
    return v;
}

std::string ExactPolynomial::to_string() const {
    if (coefficients.empty())
        return "0";
    // highest degree first
    std::vector<std::pair<std::vector<int>, Rational>> terms(coefficients.begin(), coefficients.end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.first.begin(), a.first.end(), 0) >
               std::accumulate(b.first.begin(), b.first.end(), 0);
    });
    std::string out;
    for (const auto& [e, c] : terms) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k])
                continue;
            if (!mono.empty())
                mono += '*';
            mono += variable_name(static_cast<int>(k), m);
            if (e[k] > 1)
                mono += '^' + std::to_string(e[k]);
        }
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        std::string term;
        if (mono.empty())
            term = hurwitz::to_string(a);
        else if (a == 1)
            term = mono;
        else
            term = hurwitz::to_string(a) + "*" + mono;
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

std::vector<std::vector<int>> fit_basis(int m, int n, int degree_cap) {
    std::vector<std::vector<int>> out;
    const int vars = m + n;
    std::vector<int> e(vars, 0);
    // free variables: all but index m-1 (mu_m)
    std::vector<int> free;
    for (int k = 0; k < vars; ++k)
        if (k != m - 1)
            free.push_back(k);
    for (int deg = 0; deg <= degree_cap; ++deg) {
        // compositions of deg into free.size() nonnegative parts, lexicographically descending
        auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
            if (pos + 1 == free.size() || free.empty()) {
                if (free.empty()) {
                    if (left == 0)
                        out.push_back(e);
                    return;
                }
                e[free[pos]] = left;
                out.push_back(e);
                e[free[pos]] = 0;
                return;
            }
            for (int v = left; v >= 0; --v) {
                e[free[pos]] = v;
                self(self, pos + 1, left - v);
            }
            e[free[pos]] = 0;
        };
        rec(rec, 0, deg);
    }
    return out;
}

ExactPolynomial fit_polynomial(const std::vector<SamplePoint>& points, int degree_cap) {
    if (points.empty())
        throw FitError(FitError::Reason::rank_deficient, "fit_polynomial: no points");
    if (degree_cap < 0)
        throw std::invalid_argument("fit_polynomial: negative degree cap");
    const int m = points.front().mu.length(), n = points.front().nu.length();
    for (const auto& p : points)
        if (p.mu.length() != m || p.nu.length() != n || p.mu.size() != p.nu.size())
            throw std::invalid_argument("fit_polynomial: points of mixed shape");
    const auto basis = fit_basis(m, n, degree_cap);
    const std::size_t cols = basis.size();

    std::vector<std::vector<Rational>> a;
    for (const auto& p : points) {
        auto row = basis_row(basis, p.mu, p.nu);
        row.push_back(p.value);
        a.push_back(std::move(row));
    }
    // Gauss-Jordan on the augmented matrix
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != r && a[i][c] != 0) {
                const Rational f = a[i][c];
                for (std::size_t k = c; k <= cols; ++k)
                    a[i][k] -= f * a[r][k];
            }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][cols] != 0)
            throw FitError(FitError::Reason::inconsistent,
                           "fit_polynomial: no polynomial of degree <= " + std::to_string(degree_cap) +
                               " through the points");
    if (r < cols)
        throw FitError(FitError::Reason::rank_deficient,
                       "fit_polynomial: rank " + std::to_string(r) + " < " + std::to_string(cols) +
                           " unknowns");
    ExactPolynomial poly;
    poly.m = m;
    poly.n = n;
    for (std::size_t i = 0; i < r; ++i)
        if (a[i][cols] != 0)
            poly.coefficients[basis[pivots[i]]] = a[i][cols];
    return poly;
}

std::string to_string(FitStatus s) {
    switch (s) {
    case FitStatus::fitted: return "fitted";
    case FitStatus::underdetermined: return "underdetermined";
    case FitStatus::violation: return "violation";
    }
    return "?";
}

bool ChamberReport::violated() const { return count(FitStatus::violation) > 0; }

int ChamberReport::count(FitStatus s) const {
    return static_cast<int>(std::count_if(chambers.begin(), chambers.end(),
                                          [&](const ChamberFit& f) { return f.status == s; }));
}

const ChamberFit* ChamberReport::find(const Partition& mu, const Partition& nu) const {
    const ChamberId id = chamber_of(mu, nu);
    for (const auto& c : chambers)
        if (c.id == id)
            return &c;
    return nullptr;
}

int polynomiality_degree_cap(int genus, int m, int n) { return 4 * genus - 3 + m + n; }

std::vector<std::pair<Partition, Partition>> chamber_samples(int m, int n, int bound) {
    std::vector<std::pair<Partition, Partition>> out;
    auto boxes = [&](int len) {
        std::vector<std::vector<int>> all;
        std::vector<int> v(len, 1);
        while (true) {
            all.push_back(v);
            int k = len - 1;
            while (k >= 0 && v[k] == bound)
                v[k--] = 1;
            if (k < 0)
                break;
            ++v[k];
        }
        return all;
    };
    const auto left = boxes(m), right = boxes(n);
    for (const auto& a : left)
        for (const auto& b : right)
            if (std::accumulate(a.begin(), a.end(), 0) == std::accumulate(b.begin(), b.end(), 0))
                out.emplace_back(Partition(a), Partition(b));
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.first.size() < y.first.size();
    });
    return out;
}

ChamberReport check_chamber_polynomiality(int genus, int m, int n, Kind kind, int sample_bound,
                                          const EngineConfig& config, ResultCache* cache) {
    const auto t0 = std::chrono::steady_clock::now();
    if (genus < 0 || m < 1 || n < 1 || sample_bound < 1)
        throw std::invalid_argument("chambers: need g >= 0, m, n >= 1, bound >= 1");
    ChamberReport rep;
    rep.genus = genus;
    rep.m = m;
    rep.n = n;
    rep.kind = kind;
    rep.bound = sample_bound;
    rep.degree_cap = polynomiality_degree_cap(genus, m, n);
    if (rep.degree_cap < 0)
        throw std::invalid_argument("chambers: degree cap 4g-3+m+n is negative");

    EngineConfig cfg = config;
    cfg.max_degree = std::max(cfg.max_degree, std::max(m, n) * sample_bound);
    if (2 * genus - 2 + m + n > cfg.max_branch_points)
        throw BudgetExceeded("chambers: b = " + std::to_string(2 * genus - 2 + m + n) +
                             " exceeds the branch point budget");

    // group off-wall samples by chamber
    std::map<ChamberId, std::vector<SamplePoint>> groups;
    for (auto& [mu, nu] : chamber_samples(m, n, sample_bound)) {
        try {
            groups[chamber_of(mu, nu)].push_back(SamplePoint{mu, nu, 0});
        } catch (const OnWall&) {
            ++rep.wall_points;
        }
    }
    // Values depend on mu, nu only up to relabelling, and (except for pruned)
    // up to swapping mu and nu, so each orbit is computed once.
    auto canonical = [&](const Partition& mu, const Partition& nu) {
        auto a = mu.sorted_desc(), b = nu.sorted_desc();
        if (kind != Kind::pruned && b < a)
            std::swap(a, b);
        return std::pair(a, b);
    };
    std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> values;
    for (auto& [id, pts] : groups)
        for (auto& p : pts)
            values.emplace(canonical(p.mu, p.nu), 0);
    std::vector<std::pair<const std::pair<std::vector<int>, std::vector<int>>, Rational>*> todo;
    for (auto& kv : values)
        todo.push_back(&kv);
    rep.evaluations = static_cast<int>(todo.size());

    // parallel per sample
    const int workers = std::max(1, config.threads);
    EngineConfig inner = cfg;
    inner.threads = 1;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
            try {
                auto* kv = todo[i];
                const FactorizationType t{genus, Partition(kv->first.first), Partition(kv->first.second)};
                kv->second = hurwitz_number(t, kind, inner, cache).value;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = todo.size();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    for (auto& [id, pts] : groups)
        for (auto& p : pts)
            p.value = values.at(canonical(p.mu, p.nu));

    for (auto& [id, pts] : groups) {
        ChamberFit fit;
        fit.id = id;
        fit.samples = static_cast<int>(pts.size());
        fit.witness_mu = pts.front().mu;
        fit.witness_nu = pts.front().nu;
        for (int k = 0; k <= rep.degree_cap; ++k) {
            const auto basis = fit_basis(m, n, k);
            Echelon ech(basis.size());
            std::vector<SamplePoint> train, held;
            for (const auto& p : pts) {
                if (ech.rank() < basis.size() && ech.add(basis_row(basis, p.mu, p.nu)))
                    train.push_back(p);
                else
                    held.push_back(p);
            }
            if (ech.rank() < basis.size()) {
                // not enough independent samples at this degree
                fit.status = FitStatus::underdetermined;
                fit.training = static_cast<int>(train.size());
                fit.held_out = static_cast<int>(held.size());
                fit.polynomial.reset();
                fit.counterexample.reset();
                break;
            }
            ExactPolynomial poly = fit_polynomial(train, k);
            auto bad = std::find_if(held.begin(), held.end(), [&](const SamplePoint& p) {
                return poly.evaluate(p.mu, p.nu) != p.value;
            });
            fit.training = static_cast<int>(train.size());
            fit.held_out = static_cast<int>(held.size());
            fit.basis_degree = k;
            if (bad == held.end()) {
                // an exact interpolant with nothing held out proves nothing
                fit.status = held.empty() ? FitStatus::underdetermined : FitStatus::fitted;
                fit.polynomial = std::move(poly);
                fit.counterexample.reset();
                break;
            }
            fit.status = FitStatus::violation;
            fit.polynomial = std::move(poly);
            fit.counterexample = *bad;
        }
        rep.chambers.push_back(std::move(fit));
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace hurwitz
