#pragma once

#include "qhopf/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qhopf {

// Polynomial in the formal parameter h with exact rational coefficients.
// Stored sparsely as (exponent, coefficient) pairs, ascending exponents,
// never holding a zero coefficient.
class HPoly {
  public:
    HPoly() = default;
    explicit HPoly(Rat c, int k = 0) {
        if (c != 0) terms_.emplace_back(k, std::move(c));
    }

    static HPoly one() { return HPoly(Rat(1)); }
    static HPoly h(int k = 1) { return HPoly(Rat(1), k); }

    bool is_zero() const { return terms_.empty(); }

    Rat coeff(int k) const {
        for (const auto& [e, c] : terms_)
            if (e == k) return c;
        return Rat(0);
    }

    int min_degree() const { return terms_.empty() ? 0 : terms_.front().first; }
    int max_degree() const { return terms_.empty() ? 0 : terms_.back().first; }

    // True when every monomial has exponent >= k.
    bool divisible_by_h(int k) const { return terms_.empty() || terms_.front().first >= k; }

    // Multiply by h^k (k may be negative; caller guarantees divisibility).
    HPoly shifted(int k) const {
        HPoly r = *this;
        for (auto& [e, c] : r.terms_) e += k;
        return r;
    }

    HPoly& operator+=(const HPoly& o) {
        std::vector<std::pair<int, Rat>> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].first < o.terms_[j].first) {
                merged.push_back(std::move(terms_[i++]));
            } else if (terms_[i].first > o.terms_[j].first) {
                merged.push_back(o.terms_[j++]);
            } else {
                Rat c = terms_[i].second + o.terms_[j].second;
                if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
        for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
        terms_ = std::move(merged);
        return *this;
    }

    HPoly operator+(const HPoly& o) const {
        HPoly r = *this;
        r += o;
        return r;
    }

    HPoly operator-() const {
        HPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    HPoly& operator-=(const HPoly& o) { return *this += -o; }
    HPoly operator-(const HPoly& o) const { return *this + -o; }

    HPoly operator*(const HPoly& o) const {
        HPoly r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

    HPoly& scale(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, k] : terms_) k *= c;
        return *this;
    }

    HPoly scaled(const Rat& c) const {
        HPoly r = *this;
        r.scale(c);
        return r;
    }

    void add_term(int k, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.begin();
        while (it != terms_.end() && it->first < k) ++it;
        if (it != terms_.end() && it->first == k) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        } else {
            terms_.insert(it, {k, c});
        }
    }

    bool operator==(const HPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const HPoly& o) const { return !(*this == o); }

    const std::vector<std::pair<int, Rat>>& terms() const { return terms_; }

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (const auto& [e, c] : terms_) {
            h ^= static_cast<std::uint64_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= std::hash<std::string>{}(c.str()) + (h << 6) + (h >> 2);
        }
        return h;
    }

  private:
    std::vector<std::pair<int, Rat>> terms_;
};

// (1/2)^k h^k, the weight every glued matching pair carries.
inline HPoly half_h_pow(int k) {
    return HPoly(Rat(Int(1), Int(1) << k), k);
}

}  // namespace qhopf
