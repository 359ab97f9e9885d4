#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhopf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-text problem; `line` is 1-based, 0 when no line applies.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
          line(line_) {}
};

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw Error("zero denominator");
    return Rat(Int(num), Int(den));
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// n (n-1) ... (n-k+1)
inline Int falling(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= n - i;
    return r;
}

// "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
    return r.str();
}

}  // namespace qhopf
