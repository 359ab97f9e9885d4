#include "qhopf/randelem.hpp"

namespace qhopf {

Necklace random_necklace(SplitMix64& rng, const DoubleQuiver& dq, int max_edges) {
    if (max_edges < 1 || rng.below(5) == 0)
        return Necklace::idempotent(rng.range(0, dq.vertex_count() - 1));

    int len = rng.range(1, max_edges);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<DartId> w;
        w.push_back(rng.range(0, dq.dart_count() - 1));
        bool stuck = false;
        while (static_cast<int>(w.size()) < len) {
            std::vector<DartId> options;
            for (DartId d = 0; d < dq.dart_count(); ++d)
                if (dq.tail(d) == dq.head(w.back())) options.push_back(d);
            if (options.empty()) {
                stuck = true;
                break;
            }
            w.push_back(options[rng.below(options.size())]);
        }
        if (stuck || dq.head(w.back()) != dq.tail(w.front())) continue;
        return Necklace::cyclic(std::move(w), dq);
    }
    return Necklace::idempotent(rng.range(0, dq.vertex_count() - 1));
}

NecklaceMonomial random_monomial(SplitMix64& rng, const DoubleQuiver& dq, int max_edges) {
    int nfac = rng.range(0, 3);
    std::vector<Necklace> factors;
    int budget = max_edges;
    for (int i = 0; i < nfac; ++i) {
        Necklace n = random_necklace(rng, dq, budget);
        budget -= n.edge_count();
        factors.push_back(std::move(n));
    }
    return NecklaceMonomial(std::move(factors));
}

SymLElement random_element(SplitMix64& rng, const DoubleQuiver& dq, int max_edges) {
    SymLElement out;
    int nterms = rng.range(1, 3);
    for (int i = 0; i < nterms; ++i) {
        long long num = rng.range(1, 8) * (rng.below(2) ? 1 : -1);
        long long den = rng.range(1, 8);
        int hdeg = rng.range(0, 2);
        out.add(random_monomial(rng, dq, max_edges), HPoly(rat(num, den), hdeg));
    }
    return out;
}

}  // namespace qhopf
