#include "qhopf/hopf.hpp"

#include "qhopf/pool.hpp"
#include "qhopf/render.hpp"
#include "qhopf/symalg.hpp"

namespace qhopf {

SymLElement star(const NecklaceMonomial& p, const NecklaceMonomial& r, const DoubleQuiver& dq) {
    std::vector<Necklace> all = p.factors();
    all.insert(all.end(), r.factors().begin(), r.factors().end());
    EdgeSet es = EdgeSet::of(all);
    int left = p.edge_count();

    SymLElement out;
    for (const Matching& m : enumerate_pair_matchings(es, left, dq)) {
        GlueResult g = cut_and_glue(all, es, m, dq);
        int negatives = 0;
        for (auto [a, b] : m.pairs)
            if (dq.is_original(es.dart[b])) ++negatives;
        HPoly w = half_h_pow(m.size());
        if (negatives % 2) w = -w;
        out.add(g.monomial(), std::move(w));
    }
    return out;
}

SymLElement star(const SymLElement& p, const SymLElement& r, const DoubleQuiver& dq,
                 int workers) {
    struct Job {
        const NecklaceMonomial* a;
        const NecklaceMonomial* b;
        HPoly c;
    };
    std::vector<Job> jobs;
    for (const auto& [ma, ca] : p.terms())
        for (const auto& [mb, cb] : r.terms()) jobs.push_back({&ma, &mb, ca * cb});
    std::sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) {
        if (*x.a < *y.a) return true;
        if (*y.a < *x.a) return false;
        return *x.b < *y.b;
    });

    auto chunk = [&](std::size_t b, std::size_t e) {
        SymLElement acc;
        for (std::size_t i = b; i < e; ++i) {
            SymLElement s = star(*jobs[i].a, *jobs[i].b, dq);
            s.scale(jobs[i].c);
            acc += s;
        }
        return acc;
    };
    SymLElement out;
    for (SymLElement& part : run_chunked<SymLElement>(jobs.size(), workers, chunk)) out += part;
    return out;
}

int sign_component(const EdgeSet& es, const Matching& m, const GlueResult& g, unsigned mask,
                   const DoubleQuiver& dq) {
    int sign = 1;
    for (auto [a, b] : m.pairs) {
        int x = dq.is_original(es.dart[a]) ? a : b;
        int start = g.orbit_of[x];
        int target = g.orbit_of[es.next[x]];
        bool s2 = (mask >> start) & 1u;
        bool t2 = (mask >> target) & 1u;
        if (s2 == t2) return 0;
        if (s2) sign = -sign;  // start in component 2, target in component 1
    }
    return sign;
}

TensorElement coproduct(const NecklaceMonomial& p, const DoubleQuiver& dq) {
    EdgeSet es = EdgeSet::of(p.factors());
    TensorElement out;
    for (const Matching& m : enumerate_internal_matchings(es, dq)) {
        GlueResult g = cut_and_glue(p.factors(), es, m, dq);
        const int nf = static_cast<int>(g.factors.size());
        if (nf > 30) throw Error("too many factors to split");

        // When a cut pair starts and ends in the same resulting factor no
        // assignment separates them, so the whole pairing contributes 0.
        bool dead = false;
        for (auto [a, b] : m.pairs) {
            int x = dq.is_original(es.dart[a]) ? a : b;
            if (g.orbit_of[x] == g.orbit_of[es.next[x]]) {
                dead = true;
                break;
            }
        }
        if (dead) continue;

        HPoly weight = half_h_pow(m.size());
        for (unsigned mask = 0; mask < (1u << nf); ++mask) {
            int sgn = sign_component(es, m, g, mask, dq);
            if (sgn == 0) continue;
            std::vector<Necklace> first, second;
            for (int i = 0; i < nf; ++i)
                ((mask >> i) & 1u ? second : first).push_back(g.factors[i]);
            HPoly c = weight;
            if (sgn < 0) c = -c;
            out.add({NecklaceMonomial(std::move(first)), NecklaceMonomial(std::move(second))},
                    std::move(c));
        }
    }
    return out;
}

TensorElement coproduct(const SymLElement& p, const DoubleQuiver& dq, int workers) {
    auto terms = p.sorted_terms();
    auto chunk = [&](std::size_t b, std::size_t e) {
        TensorElement acc;
        for (std::size_t i = b; i < e; ++i) {
            TensorElement t = coproduct(terms[i].first, dq);
            t.scale(terms[i].second);
            acc += t;
        }
        return acc;
    };
    TensorElement out;
    for (TensorElement& part : run_chunked<TensorElement>(terms.size(), workers, chunk))
        out += part;
    return out;
}

SymLElement antipode(const SymLElement& p) {
    SymLElement out;
    for (const auto& [m, c] : p.terms()) out.add(m, m.factor_count() % 2 ? -c : c);
    return out;
}

HPoly counit(const SymLElement& p) {
    const HPoly* c = p.coeff(NecklaceMonomial::unit());
    return c ? *c : HPoly();
}

TensorElement star(const TensorElement& a, const TensorElement& b, const DoubleQuiver& dq) {
    TensorElement out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            SymLElement left = star(ka.a, kb.a, dq);
            if (left.is_zero()) continue;
            SymLElement right = star(ka.b, kb.b, dq);
            if (right.is_zero()) continue;
            HPoly c = ca * cb;
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms()) out.add({ml, mr}, c * cl * cr);
        }
    }
    return out;
}

Tensor3Element coproduct_left(const TensorElement& t, const DoubleQuiver& dq) {
    Tensor3Element out;
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = coproduct(k.a, dq);
        for (const auto& [xy, cd] : d.terms()) out.add({xy.a, xy.b, k.b}, c * cd);
    }
    return out;
}

Tensor3Element coproduct_right(const TensorElement& t, const DoubleQuiver& dq) {
    Tensor3Element out;
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = coproduct(k.b, dq);
        for (const auto& [xy, cd] : d.terms()) out.add({k.a, xy.a, xy.b}, c * cd);
    }
    return out;
}

CheckResult check_associativity(const SymLElement& p, const SymLElement& r, const SymLElement& s,
                                const DoubleQuiver& dq) {
    SymLElement lhs = star(star(p, r, dq), s, dq);
    SymLElement rhs = star(p, star(r, s, dq), dq);
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("(P*R)*S - P*(R*S) = " + to_string(lhs - rhs, dq) + " for P = " +
                             to_string(p, dq) + ", R = " + to_string(r, dq) + ", S = " +
                             to_string(s, dq));
}

CheckResult check_coassociativity(const SymLElement& p, const DoubleQuiver& dq) {
    TensorElement cp = coproduct(p, dq);
    Tensor3Element lhs = coproduct_left(cp, dq);
    Tensor3Element rhs = coproduct_right(cp, dq);
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("(D x id)D - (id x D)D = " + to_string(lhs - rhs, dq) + " for P = " +
                             to_string(p, dq));
}

CheckResult check_bialgebra(const SymLElement& p, const SymLElement& r, const DoubleQuiver& dq) {
    TensorElement lhs = coproduct(star(p, r, dq), dq);
    TensorElement rhs = star(coproduct(p, dq), coproduct(r, dq), dq);
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("D(P*R) - D(P)*D(R) = " + to_string(lhs - rhs, dq) + " for P = " +
                             to_string(p, dq) + ", R = " + to_string(r, dq));
}

namespace {

// m((S x id) D P) with the antipode folded into the monomial sign.
SymLElement antipode_convolution(const SymLElement& p, const DoubleQuiver& dq, bool left) {
    SymLElement out;
    TensorElement d = coproduct(p, dq);
    for (const auto& [k, c] : d.terms()) {
        const NecklaceMonomial& signed_leg = left ? k.a : k.b;
        SymLElement prod = star(k.a, k.b, dq);
        prod.scale(signed_leg.factor_count() % 2 ? -c : c);
        out += prod;
    }
    return out;
}

}  // namespace

CheckResult check_antipode(const SymLElement& p, const DoubleQuiver& dq) {
    SymLElement expected = unit_element(counit(p));
    SymLElement lhs = antipode_convolution(p, dq, true);
    if (lhs != expected)
        return CheckResult::fail("m(S x id)D P = " + to_string(lhs, dq) + " but eps(P) 1 = " +
                                 to_string(expected, dq) + " for P = " + to_string(p, dq));
    SymLElement rhs = antipode_convolution(p, dq, false);
    if (rhs != expected)
        return CheckResult::fail("m(id x S)D P = " + to_string(rhs, dq) + " but eps(P) 1 = " +
                                 to_string(expected, dq) + " for P = " + to_string(p, dq));
    if (antipode(antipode(p)) != p)
        return CheckResult::fail("S(S(P)) != P for P = " + to_string(p, dq));
    return CheckResult::pass();
}

CheckResult check_counit(const SymLElement& p, const DoubleQuiver& dq) {
    SymLElement left, right;
    TensorElement d = coproduct(p, dq);
    for (const auto& [k, c] : d.terms()) {
        left.add(k.b, c * counit(SymLElement::basis(k.a)));
        right.add(k.a, c * counit(SymLElement::basis(k.b)));
    }
    if (left != p)
        return CheckResult::fail("(eps x id)D P = " + to_string(left, dq) + " != P = " +
                                 to_string(p, dq));
    if (right != p)
        return CheckResult::fail("(id x eps)D P = " + to_string(right, dq) + " != P = " +
                                 to_string(p, dq));
    return CheckResult::pass();
}

namespace {

template <class K>
bool h_divisible(const LinComb<K>& e, int k) {
    for (const auto& [key, c] : e.terms())
        if (!c.divisible_by_h(k)) return false;
    return true;
}

template <class K>
LinComb<K> h_coefficient(const LinComb<K>& e, int k) {
    LinComb<K> out;
    for (const auto& [key, c] : e.terms()) out.add(key, HPoly(c.coeff(k)));
    return out;
}

}  // namespace

CheckResult check_classical_star(const SymLElement& p, const SymLElement& r,
                                 const DoubleQuiver& dq) {
    SymLElement comm = star(p, r, dq) - star(r, p, dq);
    if (!h_divisible(comm, 1))
        return CheckResult::fail("P*R - R*P has an h^0 part: " + to_string(comm, dq));
    SymLElement limit = h_coefficient(comm, 1);
    SymLElement br = bracket(p, r, dq);
    if (limit != br)
        return CheckResult::fail("h-linear part of P*R - R*P is " + to_string(limit, dq) +
                                 " but {P,R} = " + to_string(br, dq) + " for P = " +
                                 to_string(p, dq) + ", R = " + to_string(r, dq));
    return CheckResult::pass();
}

CheckResult check_classical_limits(const Necklace& a, const Necklace& b, const DoubleQuiver& dq) {
    SymLElement ea = necklace_element(a), eb = necklace_element(b);
    CheckResult starres = check_classical_star(ea, eb, dq);
    if (!starres.ok) return starres;

    TensorElement anti = coproduct(ea, dq);
    anti -= flip(anti);
    if (!h_divisible(anti, 1))
        return CheckResult::fail("D(f) - flip D(f) has an h^0 part for f = " + to_string(ea, dq));
    TensorElement limit = h_coefficient(anti, 1);
    TensorElement cb = cobracket(a, dq);
    if (limit != cb)
        return CheckResult::fail("h-linear part of D(f) - flip D(f) is " + to_string(limit, dq) +
                                 " but delta(f) = " + to_string(cb, dq) + " for f = " +
                                 to_string(ea, dq));
    return CheckResult::pass();
}

}  // namespace qhopf
