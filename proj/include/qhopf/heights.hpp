#pragma once

#include "qhopf/element.hpp"

namespace qhopf {

// A necklace whose letters carry pairwise-distinct positive heights, stored
// in the canonical rotation (least as a (dart, height) sequence).
class HeightedNecklace {
  public:
    static HeightedNecklace idempotent(VertexId v);
    static HeightedNecklace cyclic(std::vector<std::pair<DartId, int>> word);

    bool is_idempotent() const { return word_.empty(); }
    VertexId vertex() const { return vertex_; }
    const std::vector<std::pair<DartId, int>>& word() const { return word_; }

    std::uint64_t hash() const { return hash_; }
    bool operator==(const HeightedNecklace& o) const {
        return vertex_ == o.vertex_ && word_ == o.word_;
    }
    bool operator<(const HeightedNecklace& o) const;

  private:
    void rehash();
    VertexId vertex_ = -1;
    std::vector<std::pair<DartId, int>> word_;
    std::uint64_t hash_ = 0;
};

// Unordered product of heighted necklaces; equality is structural, so two
// collections agree exactly when they match after factor sorting and
// per-factor canonical rotation.
class HeightedCollection {
  public:
    HeightedCollection() { rehash(); }
    explicit HeightedCollection(std::vector<HeightedNecklace> factors);

    const std::vector<HeightedNecklace>& factors() const { return factors_; }
    int edge_count() const;
    // 1..N heights, each exactly once.
    bool heights_consistent() const;

    std::uint64_t hash() const { return hash_; }
    bool operator==(const HeightedCollection& o) const { return factors_ == o.factors_; }
    bool operator<(const HeightedCollection& o) const {
        return std::lexicographical_compare(factors_.begin(), factors_.end(), o.factors_.begin(),
                                            o.factors_.end());
    }

  private:
    void rehash();
    std::vector<HeightedNecklace> factors_;
    std::uint64_t hash_ = 0;
};

using HeightedElement = LinComb<HeightedCollection>;

// Symmetrization: the average of the monomial over every assignment of the
// heights 1..N to its N letters. Idempotent factors pass through unlabeled.
HeightedElement phi_w(const NecklaceMonomial& p, const DoubleQuiver& dq);
HeightedElement phi_w(const SymLElement& p, const DoubleQuiver& dq);

bool heighted_equal(const HeightedElement& a, const HeightedElement& b);

}  // namespace qhopf
