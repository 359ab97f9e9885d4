#pragma once

#include "qhopf/hpoly.hpp"
#include "qhopf/quiver.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qhopf {

// Index of the lexicographically least rotation of `w` (Booth's algorithm).
std::size_t least_rotation(std::span<const int> w);

// A basis element of the cyclic-word space: either a vertex idempotent or a
// nonempty composable cyclic word in the darts of a doubled quiver, stored in
// its canonical (least) rotation. Immutable once built; the hash is cached.
class Necklace {
  public:
    static Necklace idempotent(VertexId v);
    // Canonicalizes; throws Error unless consecutive darts compose
    // (head of w[i] == tail of w[i+1], cyclically).
    static Necklace cyclic(std::vector<DartId> word, const DoubleQuiver& dq);

    bool is_idempotent() const { return word_.empty(); }
    VertexId vertex() const { return vertex_; }
    const std::vector<DartId>& word() const { return word_; }
    int edge_count() const { return static_cast<int>(word_.size()); }

    std::uint64_t hash() const { return hash_; }

    bool operator==(const Necklace& o) const {
        return vertex_ == o.vertex_ && word_ == o.word_;
    }
    bool operator!=(const Necklace& o) const { return !(*this == o); }

    // Total order: idempotents first (by vertex), then words by length,
    // then lexicographically by dart id.
    bool operator<(const Necklace& o) const;

  private:
    Necklace() = default;
    void rehash();

    VertexId vertex_ = -1;           // tail vertex for words, the vertex for idempotents
    std::vector<DartId> word_;       // empty iff idempotent
    std::uint64_t hash_ = 0;
};

Necklace canonical_necklace(std::vector<DartId> word, const DoubleQuiver& dq);

// Unordered product of necklaces, stored sorted. The empty monomial is the
// algebra unit.
class NecklaceMonomial {
  public:
    NecklaceMonomial() { rehash(); }
    explicit NecklaceMonomial(std::vector<Necklace> factors);

    static NecklaceMonomial unit() { return NecklaceMonomial(); }
    static NecklaceMonomial single(Necklace n) {
        return NecklaceMonomial(std::vector<Necklace>{std::move(n)});
    }

    const std::vector<Necklace>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int factor_count() const { return static_cast<int>(factors_.size()); }
    int edge_count() const;
    int idempotent_count() const;

    NecklaceMonomial times(const NecklaceMonomial& o) const;

    std::uint64_t hash() const { return hash_; }
    bool operator==(const NecklaceMonomial& o) const { return factors_ == o.factors_; }
    bool operator!=(const NecklaceMonomial& o) const { return !(*this == o); }
    bool operator<(const NecklaceMonomial& o) const;

  private:
    void rehash();
    std::vector<Necklace> factors_;
    std::uint64_t hash_ = 0;
};

}  // namespace qhopf
