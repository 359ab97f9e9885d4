#include "qhopf/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace qhopf {

namespace {

void word_dfs(const DoubleQuiver& dq, std::vector<DartId>& w, int len,
              std::unordered_set<Necklace, MemberHash<Necklace>>& seen) {
    if (static_cast<int>(w.size()) == len) {
        if (dq.head(w.back()) == dq.tail(w.front())) seen.insert(Necklace::cyclic(w, dq));
        return;
    }
    for (DartId d = 0; d < dq.dart_count(); ++d) {
        if (!w.empty() && dq.head(w.back()) != dq.tail(d)) continue;
        w.push_back(d);
        word_dfs(dq, w, len, seen);
        w.pop_back();
    }
}

}  // namespace

std::vector<Necklace> all_necklaces(const DoubleQuiver& dq, int max_edges,
                                    bool include_idempotents) {
    std::vector<Necklace> out;
    if (include_idempotents)
        for (VertexId v = 0; v < dq.vertex_count(); ++v) out.push_back(Necklace::idempotent(v));
    std::unordered_set<Necklace, MemberHash<Necklace>> seen;
    for (int len = 1; len <= max_edges; ++len) {
        std::vector<DartId> w;
        word_dfs(dq, w, len, seen);
    }
    out.insert(out.end(), seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Multisets over the sorted necklace list, non-decreasing index order.
void mono_dfs(const std::vector<Necklace>& basis, std::size_t from, int edge_budget,
              int idem_budget, std::vector<Necklace>& acc,
              std::vector<NecklaceMonomial>& out) {
    out.push_back(NecklaceMonomial(acc));
    for (std::size_t i = from; i < basis.size(); ++i) {
        const Necklace& n = basis[i];
        int e = n.edge_count();
        int idem = n.is_idempotent() ? 1 : 0;
        if (e > edge_budget || (e == 0 && idem_budget == 0)) continue;
        if (e == 0 && idem > idem_budget) continue;
        acc.push_back(n);
        mono_dfs(basis, i, edge_budget - e, idem_budget - idem, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<NecklaceMonomial> monomials_up_to_edges(const DoubleQuiver& dq, int max_edges,
                                                    int max_idem_factors) {
    std::vector<Necklace> basis = all_necklaces(dq, max_edges, max_idem_factors > 0);
    std::vector<NecklaceMonomial> out;
    std::vector<Necklace> acc;
    mono_dfs(basis, 0, max_edges, max_idem_factors, acc, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void mono_deg_dfs(const std::vector<Necklace>& basis, std::size_t from, int degree_budget,
                  std::vector<Necklace>& acc, std::vector<NecklaceMonomial>& out) {
    out.push_back(NecklaceMonomial(acc));
    for (std::size_t i = from; i < basis.size(); ++i) {
        const Necklace& n = basis[i];
        int d = n.is_idempotent() ? 1 : n.edge_count();
        if (d > degree_budget) continue;
        acc.push_back(n);
        mono_deg_dfs(basis, i, degree_budget - d, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<NecklaceMonomial> monomials_up_to_degree(const DoubleQuiver& dq, int max_degree) {
    std::vector<Necklace> basis = all_necklaces(dq, max_degree, true);
    std::vector<NecklaceMonomial> out;
    std::vector<Necklace> acc;
    mono_deg_dfs(basis, 0, max_degree, acc, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace qhopf
