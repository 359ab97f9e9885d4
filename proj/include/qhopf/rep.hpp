#pragma once

#include "qhopf/check.hpp"
#include "qhopf/element.hpp"
#include "qhopf/heights.hpp"

namespace qhopf {

// One matrix size per vertex.
struct DimVector {
    std::vector<int> dims;
    int at(VertexId v) const { return dims[static_cast<std::size_t>(v)]; }
};

// Comma-separated sizes in vertex declaration order, e.g. "2,1".
DimVector parse_dims(const std::string& text, const Quiver& q);

// A matrix-entry variable (M_d)_{i j} with 1-based indices, packed so that
// integer order is (dart, row, column) order. Rows index the head vertex
// space and columns the tail vertex space.
using VarId = int;
inline VarId make_var(DartId d, int i, int j) { return (d << 10) | (i << 5) | j; }
inline DartId var_dart(VarId v) { return v >> 10; }
inline int var_row(VarId v) { return (v >> 5) & 31; }
inline int var_col(VarId v) { return v & 31; }

// The canonically paired variable: (M_e)_{ij} <-> (M_{e*})_{ji}.
inline VarId conj_var(VarId v, const DoubleQuiver& dq) {
    return make_var(dq.reverse(var_dart(v)), var_col(v), var_row(v));
}

// Multiset of variables with positive exponents, sorted by VarId.
class RepMono {
  public:
    RepMono() { rehash(); }
    explicit RepMono(std::vector<std::pair<VarId, int>> powers);

    static RepMono one() { return RepMono(); }
    static RepMono var(VarId v) { return RepMono({{v, 1}}); }

    const std::vector<std::pair<VarId, int>>& powers() const { return powers_; }
    bool is_one() const { return powers_.empty(); }
    int power(VarId v) const;
    int degree() const;

    RepMono times(const RepMono& o) const;
    // Lowers v by k (k <= power(v)).
    RepMono lowered(VarId v, int k) const;

    std::uint64_t hash() const { return hash_; }
    bool operator==(const RepMono& o) const { return powers_ == o.powers_; }
    bool operator<(const RepMono& o) const;

  private:
    void rehash();
    std::vector<std::pair<VarId, int>> powers_;
    std::uint64_t hash_ = 0;
};

using RepPoly = LinComb<RepMono>;

RepPoly rep_mul(const RepPoly& a, const RepPoly& b);

// Trace of a monomial in matrix entries: each necklace contributes the sum
// over junction indices of the product of its letter entries (a letter at
// positions r gets row = junction after it, column = junction before it);
// a vertex idempotent contributes the scalar dim(v).
RepPoly trace_rep(const NecklaceMonomial& p, const DimVector& l, const DoubleQuiver& dq);
RepPoly trace_rep(const SymLElement& p, const DimVector& l, const DoubleQuiver& dq);

// Flat-space star product for the pairing that couples (M_e)_{ij} with
// (M_{e*})_{ji}: f * g = sum over derivative multi-indices with weight
// (h/2)^k, the starred-side derivatives carrying the minus signs.
RepPoly classical_moyal(const RepPoly& f, const RepPoly& g, const DimVector& l,
                        const DoubleQuiver& dq);

// First-order antisymmetric part of classical_moyal.
RepPoly rep_poisson(const RepPoly& f, const RepPoly& g, const DimVector& l,
                    const DoubleQuiver& dq);

// A normal-ordered differential-operator term: polynomial coefficient in the
// original-edge entries times a monomial of partials in those same entries.
struct DiffTerm {
    RepMono coord;
    RepMono deriv;
    std::uint64_t hash() const {
        std::uint64_t h = coord.hash();
        return h ^ (deriv.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
    bool operator==(const DiffTerm& o) const { return coord == o.coord && deriv == o.deriv; }
    bool operator<(const DiffTerm& o) const {
        if (coord < o.coord) return true;
        if (o.coord < coord) return false;
        return deriv < o.deriv;
    }
};

using DiffOp = LinComb<DiffTerm>;

DiffOp diff_one();
// Composition (left operator applied last), renormal-ordered exactly.
DiffOp diff_mul(const DiffOp& a, const DiffOp& b);

// Average over all orderings of the variables of each monomial, sending an
// original entry to itself (as a multiplication operator) and a starred
// entry (M_{e*})_{ij} to -h d/d(M_e)_{ji}.
DiffOp weyl_symmetrize(const RepPoly& f, const DoubleQuiver& dq);

// Quantized trace of a heighted collection: substitute the same operator
// atoms for letters, sum over junction indices, and compose atoms by
// increasing height (height 1 leftmost). Idempotents contribute dim(v).
DiffOp rho(const HeightedCollection& c, const DimVector& l, const DoubleQuiver& dq);
DiffOp rho(const HeightedElement& e, const DimVector& l, const DoubleQuiver& dq);

// trace(star) == classical_moyal(trace, trace).
CheckResult check_diagram(const SymLElement& p, const SymLElement& r, const DimVector& l,
                          const DoubleQuiver& dq);
// rho(phi_w) == weyl_symmetrize(trace).
CheckResult check_transport(const SymLElement& p, const DimVector& l, const DoubleQuiver& dq);
// trace(bracket) == rep_poisson(trace, trace).
CheckResult check_poisson_hom(const Necklace& f, const Necklace& g, const DimVector& l,
                              const DoubleQuiver& dq);

struct RankReport {
    bool independent = true;
    int rank = 0;
    int count = 0;
    std::string dependency;  // a vanishing combination when not independent
};

// Linear independence of the traces of all monomials of degree <= max_degree
// (edges plus idempotent factors; the unit has degree 0). When
// with_idempotents is false, monomials containing idempotent factors are
// left out of the basis.
RankReport check_injectivity(int max_degree, const DimVector& l, const DoubleQuiver& dq,
                             bool with_idempotents);

}  // namespace qhopf
