#include "qhopf/heights.hpp"

#include <algorithm>
#include <numeric>

namespace qhopf {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

HeightedNecklace HeightedNecklace::idempotent(VertexId v) {
    HeightedNecklace n;
    n.vertex_ = v;
    n.rehash();
    return n;
}

HeightedNecklace HeightedNecklace::cyclic(std::vector<std::pair<DartId, int>> word) {
    if (word.empty()) throw Error("empty heighted word");
    // Canonical rotation via the plain least-rotation on an encoding that
    // preserves (dart, height) lexicographic order.
    std::vector<int> enc(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        enc[i] = (word[i].first << 12) | word[i].second;
    std::size_t r = least_rotation(enc);
    std::rotate(word.begin(), word.begin() + r, word.end());
    HeightedNecklace n;
    n.word_ = std::move(word);
    n.rehash();
    return n;
}

void HeightedNecklace::rehash() {
    std::uint64_t h = word_.empty() ? 0xa0761d6478bd642full : 0xe7037ed1a0b428dbull;
    h = mix(h, static_cast<std::uint64_t>(vertex_ + 1));
    for (auto [d, ht] : word_) {
        h = mix(h, static_cast<std::uint64_t>(d + 1));
        h = mix(h, static_cast<std::uint64_t>(ht));
    }
    hash_ = h;
}

bool HeightedNecklace::operator<(const HeightedNecklace& o) const {
    if (is_idempotent() != o.is_idempotent()) return is_idempotent();
    if (is_idempotent()) return vertex_ < o.vertex_;
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
}

HeightedCollection::HeightedCollection(std::vector<HeightedNecklace> factors)
    : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    rehash();
}

int HeightedCollection::edge_count() const {
    int n = 0;
    for (const auto& f : factors_) n += static_cast<int>(f.word().size());
    return n;
}

bool HeightedCollection::heights_consistent() const {
    std::vector<int> hs;
    for (const auto& f : factors_)
        for (auto [d, ht] : f.word()) hs.push_back(ht);
    std::sort(hs.begin(), hs.end());
    for (std::size_t i = 0; i < hs.size(); ++i)
        if (hs[i] != static_cast<int>(i) + 1) return false;
    return true;
}

void HeightedCollection::rehash() {
    std::uint64_t h = 0x589965cc75374cc3ull;
    for (const auto& f : factors_) h = mix(h, f.hash());
    hash_ = h;
}

HeightedElement phi_w(const NecklaceMonomial& p, const DoubleQuiver& dq) {
    (void)dq;
    const int n = p.edge_count();
    if (n > 10) throw Error("symmetrization over " + std::to_string(n) + "! orderings refused");

    // Letter slots in factor-list order; idempotent factors have none.
    std::vector<HeightedNecklace> idems;
    std::vector<const Necklace*> words;
    for (const Necklace& f : p.factors()) {
        if (f.is_idempotent())
            idems.push_back(HeightedNecklace::idempotent(f.vertex()));
        else
            words.push_back(&f);
    }

    std::vector<int> heights(n);
    std::iota(heights.begin(), heights.end(), 1);
    HeightedElement out;
    const HPoly weight{Rat(1, factorial(static_cast<unsigned>(n)))};
    do {
        std::vector<HeightedNecklace> factors = idems;
        int slot = 0;
        for (const Necklace* w : words) {
            std::vector<std::pair<DartId, int>> hw;
            hw.reserve(w->word().size());
            for (DartId d : w->word()) hw.emplace_back(d, heights[slot++]);
            factors.push_back(HeightedNecklace::cyclic(std::move(hw)));
        }
        out.add(HeightedCollection(std::move(factors)), weight);
    } while (std::next_permutation(heights.begin(), heights.end()));
    return out;
}

HeightedElement phi_w(const SymLElement& p, const DoubleQuiver& dq) {
    return p.map_basis([&](const NecklaceMonomial& m) { return phi_w(m, dq); });
}

bool heighted_equal(const HeightedElement& a, const HeightedElement& b) {
    return a == b;
}

}  // namespace qhopf
