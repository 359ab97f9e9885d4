#include "qhopf/necklace.hpp"

#include <algorithm>

namespace qhopf {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

std::size_t least_rotation(std::span<const int> w) {
    // Booth's least-rotation algorithm on the doubled sequence, O(n).
    const std::size_t n = w.size();
    if (n <= 1) return 0;
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        int sj = w[j % n];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != w[(k + i + 1) % n]) {
            if (sj < w[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (sj != w[(k + i + 1) % n]) {
            if (sj < w[(k + i + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

Necklace Necklace::idempotent(VertexId v) {
    Necklace n;
    n.vertex_ = v;
    n.rehash();
    return n;
}

Necklace Necklace::cyclic(std::vector<DartId> word, const DoubleQuiver& dq) {
    if (word.empty()) throw Error("empty cyclic word");
    for (std::size_t i = 0; i < word.size(); ++i) {
        DartId a = word[i];
        DartId b = word[(i + 1) % word.size()];
        if (a < 0 || a >= dq.dart_count()) throw Error("dart id out of range");
        if (dq.head(a) != dq.tail(b))
            throw Error("word is not composable: head of " + dq.dart_name(a) +
                        " is not tail of " + dq.dart_name(b));
    }
    std::size_t r = least_rotation(word);
    std::rotate(word.begin(), word.begin() + r, word.end());
    Necklace n;
    n.word_ = std::move(word);
    n.vertex_ = dq.tail(n.word_.front());
    n.rehash();
    return n;
}

void Necklace::rehash() {
    std::uint64_t h = word_.empty() ? 0x517cc1b727220a95ull : 0x2545f4914f6cdd1dull;
    h = mix(h, static_cast<std::uint64_t>(vertex_ + 1));
    for (DartId d : word_) h = mix(h, static_cast<std::uint64_t>(d + 1));
    hash_ = h;
}

bool Necklace::operator<(const Necklace& o) const {
    if (is_idempotent() != o.is_idempotent()) return is_idempotent();
    if (is_idempotent()) return vertex_ < o.vertex_;
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
}

Necklace canonical_necklace(std::vector<DartId> word, const DoubleQuiver& dq) {
    return Necklace::cyclic(std::move(word), dq);
}

NecklaceMonomial::NecklaceMonomial(std::vector<Necklace> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    rehash();
}

int NecklaceMonomial::edge_count() const {
    int n = 0;
    for (const Necklace& f : factors_) n += f.edge_count();
    return n;
}

int NecklaceMonomial::idempotent_count() const {
    int n = 0;
    for (const Necklace& f : factors_) n += f.is_idempotent() ? 1 : 0;
    return n;
}

NecklaceMonomial NecklaceMonomial::times(const NecklaceMonomial& o) const {
    std::vector<Necklace> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return NecklaceMonomial(std::move(all));
}

bool NecklaceMonomial::operator<(const NecklaceMonomial& o) const {
    // Most edges first, so star and coproduct outputs list the untouched
    // glue (the h^0 part) ahead of its h corrections.
    int e1 = edge_count(), e2 = o.edge_count();
    if (e1 != e2) return e1 > e2;
    return std::lexicographical_compare(factors_.begin(), factors_.end(), o.factors_.begin(),
                                        o.factors_.end());
}

void NecklaceMonomial::rehash() {
    std::uint64_t h = 0x6a09e667f3bcc909ull;
    for (const Necklace& f : factors_) h = mix(h, f.hash());
    hash_ = h;
}

}  // namespace qhopf
