#pragma once

#include "qhopf/hpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qhopf {

// Hashes any key type exposing a `hash()` method.
template <class K>
struct MemberHash {
    std::size_t operator()(const K& k) const { return static_cast<std::size_t>(k.hash()); }
};

// Finite k[h]-linear combination of basis keys. Zero coefficients are pruned
// eagerly, so equality is plain map comparison. K needs hash(), ==, <.
template <class K>
class LinComb {
  public:
    using Map = std::unordered_map<K, HPoly, MemberHash<K>>;

    LinComb() = default;

    static LinComb basis(K key) {
        LinComb r;
        r.terms_.emplace(std::move(key), HPoly::one());
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    const HPoly* coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add(const K& key, const HPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const K& key, HPoly&& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(key, std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb operator+(const LinComb& o) const {
        LinComb r = *this;
        r += o;
        return r;
    }

    LinComb operator-() const {
        LinComb r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb operator-(const LinComb& o) const {
        LinComb r = *this;
        r -= o;
        return r;
    }

    LinComb& scale(const HPoly& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        Map scaled;
        scaled.reserve(terms_.size());
        for (auto& [k, v] : terms_) {
            HPoly p = v * c;
            if (!p.is_zero()) scaled.emplace(k, std::move(p));
        }
        terms_ = std::move(scaled);
        return *this;
    }

    LinComb scaled(const HPoly& c) const {
        LinComb r = *this;
        r.scale(c);
        return r;
    }

    bool operator==(const LinComb& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (const auto& [k, c] : terms_) {
            auto it = o.terms_.find(k);
            if (it == o.terms_.end() || it->second != c) return false;
        }
        return true;
    }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    // Deterministic iteration order for rendering and reduction.
    std::vector<std::pair<K, HPoly>> sorted_terms() const {
        std::vector<std::pair<K, HPoly>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    // Applies f(key) -> LinComb (over any key type) to every basis key and
    // sums, scaling by the key's coefficient. The workhorse for extending
    // basis-level operations linearly.
    template <class F>
    auto map_basis(F&& f) const {
        decltype(f(std::declval<const K&>())) r;
        for (const auto& [k, c] : terms_) {
            auto img = f(k);
            img.scale(c);
            r += img;
        }
        return r;
    }

  private:
    Map terms_;
};

// Pair and triple keys for tensor-product spaces over any base key.
template <class K>
struct Pair2 {
    K a, b;
    std::uint64_t hash() const {
        std::uint64_t h = a.hash();
        return h ^ (b.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
    bool operator==(const Pair2& o) const { return a == o.a && b == o.b; }
    bool operator<(const Pair2& o) const {
        if (a < o.a) return true;
        if (o.a < a) return false;
        return b < o.b;
    }
};

template <class K>
struct Triple {
    K a, b, c;
    std::uint64_t hash() const {
        std::uint64_t h = a.hash();
        h ^= b.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= c.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
    bool operator==(const Triple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const Triple& o) const {
        if (a < o.a) return true;
        if (o.a < a) return false;
        if (b < o.b) return true;
        if (o.b < b) return false;
        return c < o.c;
    }
};

}  // namespace qhopf
