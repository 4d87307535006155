#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "hypercount/errors.hpp"

namespace hypercount {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline int sign(const BigInt& x) { return x.sign(); }

inline BigInt abs(const BigInt& x) { return boost::multiprecision::abs(x); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt lcm(const BigInt& a, const BigInt& b) { return boost::multiprecision::lcm(a, b); }

inline BigInt pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

// Floor of the square root of a non-negative integer.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw DomainError("isqrt of negative integer");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

// Floor of the k-th root of a non-negative integer, k >= 1.
inline BigInt iroot(const BigInt& n, unsigned k) {
    if (k == 0) throw DomainError("iroot with k = 0");
    if (n < 0) throw DomainError("iroot of negative integer");
    if (k == 1 || n <= 1) return n;
    if (k == 2) return isqrt(n);
    // Binary search on [0, 2^(ceil(bits/k))].
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    BigInt hi = BigInt(1) << (bits / k + 1);
    BigInt lo = 0;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// Exact k-th root of an integer of any sign (odd k allows negatives);
// returns false if n is not a perfect k-th power.
inline bool exact_root(const BigInt& n, unsigned k, BigInt& out) {
    if (k == 0) throw DomainError("exact_root with k = 0");
    if (n < 0) {
        if (k % 2 == 0) return false;
        BigInt r;
        if (!exact_root(-n, k, r)) return false;
        out = -r;
        return true;
    }
    BigInt r = iroot(n, k);
    if (pow(r, k) == n) {
        out = r;
        return true;
    }
    return false;
}

// A rational is a square in Q iff numerator and denominator of the
// canonical form are both perfect squares.
inline bool is_rational_square(const BigRat& q) {
    return is_perfect_square(numerator(q)) && is_perfect_square(denominator(q));
}

inline BigInt content(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

// Scales a rational vector to a primitive integer vector with positive
// leading nonzero entry; the zero vector maps to itself.
inline std::vector<BigInt> primitive_integer_vector(const std::vector<BigRat>& v) {
    BigInt den = 1;
    for (const auto& x : v) den = lcm(den, denominator(x));
    std::vector<BigInt> w;
    w.reserve(v.size());
    for (const auto& x : v) w.push_back(numerator(x) * (den / denominator(x)));
    BigInt g = content(w);
    if (g == 0) return w;
    int lead = 0;
    for (const auto& x : w) {
        if (x != 0) {
            lead = sign(x);
            break;
        }
    }
    if (lead < 0) g = -g;
    for (auto& x : w) x /= g;
    return w;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const BigRat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline BigInt bigint_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw DomainError("not a decimal integer: \"" + s + "\"");
    }
}

inline BigRat bigrat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(bigint_from_string(s));
    BigInt num = bigint_from_string(s.substr(0, slash));
    BigInt den = bigint_from_string(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in \"" + s + "\"");
    return BigRat(num, den);
}

} // namespace hypercount
