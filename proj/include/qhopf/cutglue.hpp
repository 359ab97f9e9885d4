#pragma once

#include "qhopf/element.hpp"

#include <span>
#include <vector>

namespace qhopf {

// The letter positions of an ordered factor list, flattened. Idempotent
// factors contribute no positions; they ride along untouched. `next` is the
// cyclic successor within the owning factor.
struct EdgeSet {
    std::vector<DartId> dart;   // position -> dart
    std::vector<int> factor;    // position -> owning factor index
    std::vector<int> next;      // position -> cyclic successor position

    int count() const { return static_cast<int>(dart.size()); }
    static EdgeSet of(std::span<const Necklace> factors);
};

// A partial pairing of positions. Each entry (a, b) couples position a with
// position b, whose darts are mutually reverse. In the two-argument product
// a is always on the left factor list and b on the right; internally to one
// list, a holds the original-orientation dart.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
};

// All pairings of mutually reverse positions within one list, deterministic
// order, empty matching first. Grouped by original edge: for each edge e the
// candidate pairs are (position of e) x (position of e's reverse).
std::vector<Matching> enumerate_internal_matchings(const EdgeSet& es, const DoubleQuiver& dq);

// All pairings across two lists presented as one combined EdgeSet whose
// first `left_count` positions belong to the left list. For each dart d the
// candidates are (left positions of d) x (right positions of reverse(d)).
std::vector<Matching> enumerate_pair_matchings(const EdgeSet& es, int left_count,
                                               const DoubleQuiver& dq);

// The rewiring successor: step cyclically, but detour through the partner
// of every matched position.
int successor(const EdgeSet& es, const std::vector<int>& partner, int x);

struct GlueResult {
    // Necklaces built from the successor orbits (in order of each orbit's
    // least position), followed by the idempotent factors of the input.
    std::vector<Necklace> factors;
    int orbit_count = 0;
    // position -> index into `factors` of the orbit that owns it (defined
    // for every position, matched or not).
    std::vector<int> orbit_of;
    int cut_count = 0;

    NecklaceMonomial monomial() const { return NecklaceMonomial(factors); }
};

// Cuts every matched pair and reconnects along the successor map. Matched
// positions degrade to their tail vertex; an orbit with no surviving letter
// becomes a vertex idempotent.
GlueResult cut_and_glue(std::span<const Necklace> factors, const EdgeSet& es, const Matching& m,
                        const DoubleQuiver& dq);

// Convenience entry points over monomials.
GlueResult cut_and_glue_internal(const NecklaceMonomial& mono, const Matching& m,
                                 const DoubleQuiver& dq);
GlueResult cut_and_glue_pair(const NecklaceMonomial& left, const NecklaceMonomial& right,
                             const Matching& m, const DoubleQuiver& dq);

}  // namespace qhopf
