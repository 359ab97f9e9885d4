#pragma once

#include "qhopf/element.hpp"

#include <optional>
#include <vector>

namespace qhopf {

// A path in the doubled quiver: a trivial path at a vertex, or a nonempty
// composable dart word (not cyclic; rotation matters).
struct Path {
    VertexId trivial = -1;       // set iff word is empty
    std::vector<DartId> word;

    static Path at_vertex(VertexId v) { return Path{v, {}}; }
    bool is_trivial() const { return word.empty(); }

    VertexId tail(const DoubleQuiver& dq) const {
        return is_trivial() ? trivial : dq.tail(word.front());
    }
    VertexId head(const DoubleQuiver& dq) const {
        return is_trivial() ? trivial : dq.head(word.back());
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0xd6e8feb86659fd93ull ^ static_cast<std::uint64_t>(trivial + 1);
        for (DartId d : word) h ^= (d + 2) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
    bool operator==(const Path& o) const { return trivial == o.trivial && word == o.word; }
    bool operator<(const Path& o) const {
        if (trivial != o.trivial) return trivial < o.trivial;
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        return word < o.word;
    }
};

using PathSum = LinComb<Path>;
using PathPair = Pair2<Path>;
using PathTensor = LinComb<PathPair>;

// Concatenation; empty when heads and tails do not meet.
std::optional<Path> compose(const Path& p, const Path& q, const DoubleQuiver& dq);

// Projection of a path onto cyclic words: trivial paths map to idempotents,
// closed words to their necklace, open words to zero (empty optional).
std::optional<Necklace> project_cyclic(const Path& p, const DoubleQuiver& dq);

// Cyclic partial derivative of a necklace by a dart: the sum over
// occurrences of the dart of the path that walks the rest of the cycle
// (from the dart's head back around to its tail). Zero on idempotents.
PathSum cyclic_partial(const Necklace& f, DartId d, const DoubleQuiver& dq);

// Splits a path at every occurrence of the dart, dropping the occurrence:
// a_1...a_p  ->  sum over a_r = d of (a_1..a_{r-1}) (x) (a_{r+1}..a_p),
// with trivial paths at the dart's tail/head standing in for empty halves.
PathTensor d_edge(DartId d, const Path& p, const DoubleQuiver& dq);

// Lie bracket of two necklaces: sum over original edges e of
// pr( df/de . dg/de* ) - pr( df/de* . dg/de ).
SymLElement bracket(const Necklace& f, const Necklace& g, const DoubleQuiver& dq);

// Lie cobracket of a necklace, valued in (span of necklaces)^(x)2:
// sum over original edges e of (pr (x) pr)( D_e(df/de*) - D_{e*}(df/de) ).
TensorElement cobracket(const Necklace& f, const DoubleQuiver& dq);

// Bilinear extension of the bracket to the whole symmetric algebra by the
// Leibniz rule in each factor of each monomial.
SymLElement bracket(const SymLElement& f, const SymLElement& g, const DoubleQuiver& dq);

// Linear extension of the cobracket; every monomial must be a single
// necklace (throws otherwise).
TensorElement cobracket(const SymLElement& f, const DoubleQuiver& dq);

// Defect elements for the Lie bialgebra laws; all zero iff the law holds.
SymLElement jacobi_defect(const Necklace& a, const Necklace& b, const Necklace& c,
                          const DoubleQuiver& dq);
Tensor3Element cojacobi_defect(const Necklace& f, const DoubleQuiver& dq);
TensorElement cocycle_defect(const Necklace& f, const Necklace& g, const DoubleQuiver& dq);

}  // namespace qhopf
