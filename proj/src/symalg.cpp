#include "qhopf/symalg.hpp"

namespace qhopf {

std::optional<Path> compose(const Path& p, const Path& q, const DoubleQuiver& dq) {
    if (p.head(dq) != q.tail(dq)) return std::nullopt;
    if (p.is_trivial()) return q;
    if (q.is_trivial()) return p;
    Path r = p;
    r.trivial = -1;
    r.word.insert(r.word.end(), q.word.begin(), q.word.end());
    return r;
}

std::optional<Necklace> project_cyclic(const Path& p, const DoubleQuiver& dq) {
    if (p.is_trivial()) return Necklace::idempotent(p.trivial);
    if (p.tail(dq) != p.head(dq)) return std::nullopt;
    return Necklace::cyclic(p.word, dq);
}

PathSum cyclic_partial(const Necklace& f, DartId d, const DoubleQuiver& dq) {
    PathSum out;
    if (f.is_idempotent()) return out;
    const auto& w = f.word();
    const std::size_t n = w.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (w[r] != d) continue;
        Path p;
        if (n == 1) {
            p = Path::at_vertex(dq.head(d));
        } else {
            for (std::size_t k = 1; k < n; ++k) p.word.push_back(w[(r + k) % n]);
        }
        out.add(p, HPoly::one());
    }
    return out;
}

PathTensor d_edge(DartId d, const Path& p, const DoubleQuiver& dq) {
    PathTensor out;
    if (p.is_trivial()) return out;
    const auto& w = p.word;
    for (std::size_t r = 0; r < w.size(); ++r) {
        if (w[r] != d) continue;
        Path pre, suf;
        if (r == 0) {
            pre = Path::at_vertex(dq.tail(d));
        } else {
            pre.word.assign(w.begin(), w.begin() + r);
        }
        if (r + 1 == w.size()) {
            suf = Path::at_vertex(dq.head(d));
        } else {
            suf.word.assign(w.begin() + r + 1, w.end());
        }
        out.add({pre, suf}, HPoly::one());
    }
    return out;
}

namespace {

// pr( sum_p a_p p . sum_q b_q q ), dropping open words.
SymLElement project_product(const PathSum& a, const PathSum& b, const DoubleQuiver& dq) {
    SymLElement out;
    for (const auto& [p, cp] : a.terms()) {
        for (const auto& [q, cq] : b.terms()) {
            auto pq = compose(p, q, dq);
            if (!pq) continue;
            auto neck = project_cyclic(*pq, dq);
            if (!neck) continue;
            out.add(NecklaceMonomial::single(std::move(*neck)), cp * cq);
        }
    }
    return out;
}

}  // namespace

SymLElement bracket(const Necklace& f, const Necklace& g, const DoubleQuiver& dq) {
    SymLElement out;
    for (int e = 0; e < dq.edge_count(); ++e) {
        DartId es = dq.reverse(e);
        out += project_product(cyclic_partial(f, e, dq), cyclic_partial(g, es, dq), dq);
        out -= project_product(cyclic_partial(f, es, dq), cyclic_partial(g, e, dq), dq);
    }
    return out;
}

namespace {

// (pr (x) pr) applied to every split of every path in the sum.
TensorElement project_splits(DartId d, const PathSum& a, const DoubleQuiver& dq) {
    TensorElement out;
    for (const auto& [p, cp] : a.terms()) {
        PathTensor splits = d_edge(d, p, dq);
        for (const auto& [pq, c2] : splits.terms()) {
            auto n1 = project_cyclic(pq.a, dq);
            if (!n1) continue;
            auto n2 = project_cyclic(pq.b, dq);
            if (!n2) continue;
            out.add({NecklaceMonomial::single(std::move(*n1)),
                     NecklaceMonomial::single(std::move(*n2))},
                    cp * c2);
        }
    }
    return out;
}

}  // namespace

TensorElement cobracket(const Necklace& f, const DoubleQuiver& dq) {
    TensorElement out;
    for (int e = 0; e < dq.edge_count(); ++e) {
        DartId es = dq.reverse(e);
        out += project_splits(e, cyclic_partial(f, es, dq), dq);
        out -= project_splits(es, cyclic_partial(f, e, dq), dq);
    }
    return out;
}

SymLElement bracket(const SymLElement& f, const SymLElement& g, const DoubleQuiver& dq) {
    SymLElement out;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            HPoly c = cf * cg;
            const auto& fs = mf.factors();
            const auto& gs = mg.factors();
            for (std::size_t i = 0; i < fs.size(); ++i) {
                for (std::size_t j = 0; j < gs.size(); ++j) {
                    SymLElement br = bracket(fs[i], gs[j], dq);
                    if (br.is_zero()) continue;
                    std::vector<Necklace> rest;
                    rest.reserve(fs.size() + gs.size() - 2);
                    for (std::size_t k = 0; k < fs.size(); ++k)
                        if (k != i) rest.push_back(fs[k]);
                    for (std::size_t k = 0; k < gs.size(); ++k)
                        if (k != j) rest.push_back(gs[k]);
                    NecklaceMonomial rest_mono{std::move(rest)};
                    for (const auto& [m, cb] : br.terms())
                        out.add(m.times(rest_mono), cb * c);
                }
            }
        }
    }
    return out;
}

namespace {

const Necklace& single_factor(const NecklaceMonomial& m) {
    if (m.factor_count() != 1)
        throw Error("cobracket needs single-necklace monomials");
    return m.factors().front();
}

}  // namespace

TensorElement cobracket(const SymLElement& f, const DoubleQuiver& dq) {
    TensorElement out;
    for (const auto& [m, c] : f.terms()) {
        TensorElement t = cobracket(single_factor(m), dq);
        t.scale(c);
        out += t;
    }
    return out;
}

SymLElement jacobi_defect(const Necklace& a, const Necklace& b, const Necklace& c,
                          const DoubleQuiver& dq) {
    SymLElement ea = necklace_element(a), eb = necklace_element(b), ec = necklace_element(c);
    SymLElement out = bracket(ea, bracket(eb, ec, dq), dq);
    out += bracket(eb, bracket(ec, ea, dq), dq);
    out += bracket(ec, bracket(ea, eb, dq), dq);
    return out;
}

Tensor3Element cojacobi_defect(const Necklace& f, const DoubleQuiver& dq) {
    Tensor3Element once;
    TensorElement delta = cobracket(f, dq);
    for (const auto& [pq, c] : delta.terms()) {
        TensorElement left = cobracket(single_factor(pq.a), dq);
        for (const auto& [xy, c2] : left.terms()) once.add({xy.a, xy.b, pq.b}, c * c2);
    }
    Tensor3Element rot = rotate3(once);
    return once + rot + rotate3(rot);
}

namespace {

// f acting on both legs: ad_f(p (x) q) = {f,p} (x) q + p (x) {f,q}.
TensorElement adjoint(const Necklace& f, const TensorElement& t, const DoubleQuiver& dq) {
    TensorElement out;
    SymLElement ef = necklace_element(f);
    for (const auto& [pq, c] : t.terms()) {
        SymLElement ba = bracket(ef, SymLElement::basis(pq.a), dq);
        for (const auto& [m, cb] : ba.terms()) out.add({m, pq.b}, c * cb);
        SymLElement bb = bracket(ef, SymLElement::basis(pq.b), dq);
        for (const auto& [m, cb] : bb.terms()) out.add({pq.a, m}, c * cb);
    }
    return out;
}

}  // namespace

TensorElement cocycle_defect(const Necklace& f, const Necklace& g, const DoubleQuiver& dq) {
    SymLElement br = bracket(necklace_element(f), necklace_element(g), dq);
    TensorElement out = cobracket(br, dq);
    out -= adjoint(f, cobracket(g, dq), dq);
    out += adjoint(g, cobracket(f, dq), dq);
    return out;
}

}  // namespace qhopf
