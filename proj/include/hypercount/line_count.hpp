#pragma once

#include <vector>

#include "hypercount/bigint.hpp"

namespace hypercount {

// An affine lattice line: the points base + t * direction for integer t.
// The direction is a primitive nonzero integer vector.
struct RationalLine {
    std::vector<BigRat> base;
    std::vector<BigInt> direction;

    void validate() const {
        if (base.size() != direction.size() || base.empty()) throw DomainError("line dimensions mismatch");
        BigInt g = 0;
        for (const auto& d : direction) g = gcd(g, d);
        if (g == 0) throw DomainError("zero direction vector");
        if (g != 1) throw DomainError("direction vector is not primitive");
    }

    // Max-norm of the direction (the |b| of the line's point at infinity).
    BigInt direction_norm() const {
        BigInt m = 0;
        for (const auto& d : direction) m = std::max(m, abs(d));
        return m;
    }
};

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

} // namespace detail

// Exact number of integral points base + t*direction (t integer) with
// max-norm at most B. A non-integral base admits none: integer steps along
// an integer direction never repair a fractional coordinate.
inline BigInt count_on_line(const RationalLine& line, const BigInt& B) {
    line.validate();
    if (B < 0) throw DomainError("negative height bound");
    std::vector<BigInt> base_int(line.base.size());
    for (std::size_t i = 0; i < line.base.size(); ++i) {
        if (denominator(line.base[i]) != 1) return 0;
        base_int[i] = numerator(line.base[i]);
    }
    // Intersect the per-coordinate constraints |base_i + t*d_i| <= B.
    bool unbounded = true;
    BigInt lo = 0, hi = 0;
    for (std::size_t i = 0; i < base_int.size(); ++i) {
        const BigInt& d = line.direction[i];
        if (d == 0) {
            if (abs(base_int[i]) > B) return 0;
            continue;
        }
        BigInt low_val = -B - base_int[i], high_val = B - base_int[i];
        BigInt a, b;
        if (d > 0) {
            a = detail::ceil_div(low_val, d);
            b = detail::floor_div(high_val, d);
        } else {
            a = detail::ceil_div(high_val, d);
            b = detail::floor_div(low_val, d);
        }
        if (unbounded) {
            lo = a;
            hi = b;
            unbounded = false;
        } else {
            lo = std::max(lo, a);
            hi = std::min(hi, b);
        }
        if (lo > hi) return 0;
    }
    if (unbounded) throw InternalError("direction vector had no nonzero entry");
    return hi - lo + 1;
}

} // namespace hypercount
