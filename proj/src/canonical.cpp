#include "hurwitz/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

CanonicalForm canonical_form(const LabeledFactorization& f) {
    const int d = f.degree();
    const int b = static_cast<int>(f.taus.size());
    CanonicalForm best;
    best.key = {d, b};
    if (d == 0)
        return best;

    // blocks of the key: sigma1 images, sigma1 labels, taus, sigma2 labels
    std::vector<const std::vector<int>*> perms{&f.sigma1.base.images()};
    for (const auto& t : f.taus)
        perms.push_back(&t.images());
    const std::size_t len = 2 + static_cast<std::size_t>(d) * (b + 3);

    std::vector<int> g(d), ginv(d), cur(len);
    std::iota(g.begin(), g.end(), 0);
    bool have = false;
    std::uint64_t ties = 0;
    do {
        for (int x = 0; x < d; ++x)
            ginv[g[x]] = x;
        // entry at position pos of the conjugated key; compare as we go
        int cmp = have ? 0 : -1;
        std::size_t pos = 2;
        auto emit = [&](int v) {
            if (cmp == 0) {
                if (v < best.key[pos])
                    cmp = -1;
                else if (v > best.key[pos])
                    cmp = 1;
            }
            cur[pos++] = v;
        };
        auto emit_perm = [&](const std::vector<int>& p) {
            for (int j = 0; j < d && cmp <= 0; ++j)
                emit(g[p[ginv[j]]]);
        };
        auto emit_labels = [&](const std::vector<int>& l) {
            for (int j = 0; j < d && cmp <= 0; ++j)
                emit(l[ginv[j]]);
        };
        emit_perm(*perms[0]);
        if (cmp <= 0)
            emit_labels(f.sigma1.label_of);
        for (int i = 1; i <= b && cmp <= 0; ++i)
            emit_perm(*perms[i]);
        if (cmp <= 0)
            emit_labels(f.sigma2.label_of);
        if (cmp < 0) {
            cur[0] = d;
            cur[1] = b;
            best.key = cur;
            have = true;
            ties = 1;
        } else if (cmp == 0) {
            ++ties;
        }
    } while (std::next_permutation(g.begin(), g.end()));
    best.stabilizer = ties;
    return best;
}

}  // namespace hurwitz
