#pragma once

#include "qhopf/check.hpp"
#include "qhopf/cutglue.hpp"
#include "qhopf/element.hpp"

namespace qhopf {

// Star product of basis monomials: over all pairings between the two factor
// lists, glue and weight by (h/2)^k times the pairing sign (-1 for every
// matched right-hand position that carries an original edge).
SymLElement star(const NecklaceMonomial& p, const NecklaceMonomial& r, const DoubleQuiver& dq);

// Bilinear extension. `workers` > 1 splits the term-pair list across
// threads; the result is identical for any worker count.
SymLElement star(const SymLElement& p, const SymLElement& r, const DoubleQuiver& dq,
                 int workers = 1);

// The sign of one component assignment: for every matched pair the original
// -side position x contributes +1 when the factor owning x sits in
// component 1 and the factor owning x's cyclic successor sits in component
// 2, -1 the other way around, 0 when they share a component. `mask` holds
// bit i = 1 when result factor i goes to component 2.
int sign_component(const EdgeSet& es, const Matching& m, const GlueResult& g, unsigned mask,
                   const DoubleQuiver& dq);

// Coproduct of a basis monomial: over all internal pairings, glue, then
// distribute the resulting factors over two tensor legs in all ways, each
// weighted by (h/2)^k times sign_component.
TensorElement coproduct(const NecklaceMonomial& p, const DoubleQuiver& dq);
TensorElement coproduct(const SymLElement& p, const DoubleQuiver& dq, int workers = 1);

// (-1)^(number of factors), linearly.
SymLElement antipode(const SymLElement& p);

// Coefficient of the empty monomial.
HPoly counit(const SymLElement& p);

// Componentwise star on two-leg tensors.
TensorElement star(const TensorElement& a, const TensorElement& b, const DoubleQuiver& dq);

Tensor3Element coproduct_left(const TensorElement& t, const DoubleQuiver& dq);   // (coproduct x id)
Tensor3Element coproduct_right(const TensorElement& t, const DoubleQuiver& dq);  // (id x coproduct)

// Hopf-algebra laws on concrete elements.
CheckResult check_associativity(const SymLElement& p, const SymLElement& r, const SymLElement& s,
                                const DoubleQuiver& dq);
CheckResult check_coassociativity(const SymLElement& p, const DoubleQuiver& dq);
CheckResult check_bialgebra(const SymLElement& p, const SymLElement& r, const DoubleQuiver& dq);
CheckResult check_antipode(const SymLElement& p, const DoubleQuiver& dq);
CheckResult check_counit(const SymLElement& p, const DoubleQuiver& dq);

// h -> 0 degenerations: the antisymmetrized star reproduces the bracket at
// order h, and the antisymmetrized coproduct reproduces the cobracket.
CheckResult check_classical_limits(const Necklace& a, const Necklace& b, const DoubleQuiver& dq);

// Order-h star limit alone, valid for arbitrary monomials via the Leibniz
// extension of the bracket.
CheckResult check_classical_star(const SymLElement& p, const SymLElement& r,
                                 const DoubleQuiver& dq);

}  // namespace qhopf
