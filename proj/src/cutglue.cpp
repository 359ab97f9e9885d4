#include "qhopf/cutglue.hpp"

#include <algorithm>
#include <functional>

namespace qhopf {

EdgeSet EdgeSet::of(std::span<const Necklace> factors) {
    EdgeSet es;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        const auto& w = factors[fi].word();
        int base = es.count();
        for (std::size_t r = 0; r < w.size(); ++r) {
            es.dart.push_back(w[r]);
            es.factor.push_back(static_cast<int>(fi));
            es.next.push_back(base + static_cast<int>((r + 1) % w.size()));
        }
    }
    return es;
}

namespace {

// Lexicographic k-subsets of {0..n-1} as index vectors.
void each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Every way to pair some of `as` with some of `bs`: pick k of each side and
// a bijection. Lexicographic in (k, A-subset, B-subset, permutation); the
// empty pairing comes first.
std::vector<std::vector<std::pair<int, int>>> channel_pairings(const std::vector<int>& as,
                                                               const std::vector<int>& bs) {
    std::vector<std::vector<std::pair<int, int>>> out;
    out.push_back({});
    int kmax = static_cast<int>(std::min(as.size(), bs.size()));
    for (int k = 1; k <= kmax; ++k) {
        each_combination(static_cast<int>(as.size()), k, [&](const std::vector<int>& ai) {
            each_combination(static_cast<int>(bs.size()), k, [&](const std::vector<int>& bi) {
                std::vector<int> perm(k);
                for (int i = 0; i < k; ++i) perm[i] = i;
                do {
                    std::vector<std::pair<int, int>> pairs(k);
                    for (int i = 0; i < k; ++i) pairs[i] = {as[ai[i]], bs[bi[perm[i]]]};
                    out.push_back(std::move(pairs));
                } while (std::next_permutation(perm.begin(), perm.end()));
            });
        });
    }
    return out;
}

// Cartesian product of per-channel pairings, first channel outermost.
std::vector<Matching> combine_channels(
    const std::vector<std::vector<std::vector<std::pair<int, int>>>>& channels) {
    std::vector<Matching> out;
    std::vector<std::pair<int, int>> acc;
    auto rec = [&](auto&& self, std::size_t ci) -> void {
        if (ci == channels.size()) {
            out.push_back(Matching{acc});
            return;
        }
        for (const auto& opt : channels[ci]) {
            std::size_t mark = acc.size();
            acc.insert(acc.end(), opt.begin(), opt.end());
            self(self, ci + 1);
            acc.resize(mark);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<Matching> enumerate_internal_matchings(const EdgeSet& es, const DoubleQuiver& dq) {
    std::vector<std::vector<std::vector<std::pair<int, int>>>> channels;
    for (int e = 0; e < dq.edge_count(); ++e) {
        std::vector<int> as, bs;
        for (int x = 0; x < es.count(); ++x) {
            if (es.dart[x] == e) as.push_back(x);
            if (es.dart[x] == dq.reverse(e)) bs.push_back(x);
        }
        if (as.empty() || bs.empty()) continue;
        channels.push_back(channel_pairings(as, bs));
    }
    return combine_channels(channels);
}

std::vector<Matching> enumerate_pair_matchings(const EdgeSet& es, int left_count,
                                               const DoubleQuiver& dq) {
    std::vector<std::vector<std::vector<std::pair<int, int>>>> channels;
    for (int d = 0; d < dq.dart_count(); ++d) {
        std::vector<int> as, bs;
        for (int x = 0; x < left_count; ++x)
            if (es.dart[x] == d) as.push_back(x);
        for (int y = left_count; y < es.count(); ++y)
            if (es.dart[y] == dq.reverse(d)) bs.push_back(y);
        if (as.empty() || bs.empty()) continue;
        channels.push_back(channel_pairings(as, bs));
    }
    return combine_channels(channels);
}

int successor(const EdgeSet& es, const std::vector<int>& partner, int x) {
    return partner[x] >= 0 ? es.next[partner[x]] : es.next[x];
}

GlueResult cut_and_glue(std::span<const Necklace> factors, const EdgeSet& es, const Matching& m,
                        const DoubleQuiver& dq) {
    const int n = es.count();
    std::vector<int> partner(n, -1);
    for (auto [a, b] : m.pairs) {
        partner[a] = b;
        partner[b] = a;
    }

    GlueResult g;
    g.cut_count = m.size();
    g.orbit_of.assign(n, -1);
    for (int x0 = 0; x0 < n; ++x0) {
        if (g.orbit_of[x0] >= 0) continue;
        int id = static_cast<int>(g.factors.size());
        std::vector<DartId> word;
        int x = x0;
        do {
            g.orbit_of[x] = id;
            if (partner[x] < 0) word.push_back(es.dart[x]);
            x = successor(es, partner, x);
        } while (x != x0);
        if (word.empty()) {
            // Everything on this orbit was cut; it collapses to the common
            // vertex of the cut letters.
            g.factors.push_back(Necklace::idempotent(dq.tail(es.dart[x0])));
        } else {
            g.factors.push_back(Necklace::cyclic(std::move(word), dq));
        }
    }
    g.orbit_count = static_cast<int>(g.factors.size());
    for (const Necklace& f : factors)
        if (f.is_idempotent()) g.factors.push_back(f);
    return g;
}

GlueResult cut_and_glue_internal(const NecklaceMonomial& mono, const Matching& m,
                                 const DoubleQuiver& dq) {
    EdgeSet es = EdgeSet::of(mono.factors());
    return cut_and_glue(mono.factors(), es, m, dq);
}

GlueResult cut_and_glue_pair(const NecklaceMonomial& left, const NecklaceMonomial& right,
                             const Matching& m, const DoubleQuiver& dq) {
    std::vector<Necklace> all = left.factors();
    all.insert(all.end(), right.factors().begin(), right.factors().end());
    EdgeSet es = EdgeSet::of(all);
    return cut_and_glue(all, es, m, dq);
}

}  // namespace qhopf
