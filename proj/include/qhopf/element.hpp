#pragma once

#include "qhopf/lincomb.hpp"
#include "qhopf/necklace.hpp"

namespace qhopf {

// Elements of the symmetric algebra on cyclic words, with k[h] coefficients,
// and its tensor powers.
using SymLElement = LinComb<NecklaceMonomial>;
using MonoPair = Pair2<NecklaceMonomial>;
using MonoTriple = Triple<NecklaceMonomial>;
using TensorElement = LinComb<MonoPair>;
using Tensor3Element = LinComb<MonoTriple>;

inline SymLElement unit_element(const HPoly& c = HPoly::one()) {
    SymLElement r;
    r.add(NecklaceMonomial::unit(), c);
    return r;
}

inline SymLElement necklace_element(Necklace n) {
    return SymLElement::basis(NecklaceMonomial::single(std::move(n)));
}

// Commutative product, bilinear over k[h].
inline SymLElement symmetric_product(const SymLElement& a, const SymLElement& b) {
    SymLElement r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add(ma.times(mb), ca * cb);
    return r;
}

inline TensorElement tensor_of(const SymLElement& a, const SymLElement& b) {
    TensorElement r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add({ma, mb}, ca * cb);
    return r;
}

inline TensorElement flip(const TensorElement& t) {
    TensorElement r;
    for (const auto& [k, c] : t.terms()) r.add({k.b, k.a}, c);
    return r;
}

// a (x) b (x) c -> c (x) a (x) b
inline Tensor3Element rotate3(const Tensor3Element& t) {
    Tensor3Element r;
    for (const auto& [k, c] : t.terms()) r.add({k.c, k.a, k.b}, c);
    return r;
}

}  // namespace qhopf
