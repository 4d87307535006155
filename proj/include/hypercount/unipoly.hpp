#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "hypercount/bigint.hpp"
#include "hypercount/poly.hpp"

namespace hypercount {

// Dense univariate integer polynomials, coefficient c[i] on x^i, leading
// coefficient nonzero; the zero polynomial is the empty vector. This is the
// workhorse behind integer root extraction and univariate factorization.
using UZPoly = std::vector<BigInt>;

inline void uz_trim(UZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool uz_is_zero(const UZPoly& p) { return p.empty(); }

inline int uz_degree(const UZPoly& p) { return static_cast<int>(p.size()) - 1; } // -1 for zero

inline BigInt uz_eval(const UZPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline UZPoly uz_derivative(const UZPoly& p) {
    UZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigInt(static_cast<unsigned>(i)));
    uz_trim(d);
    return d;
}

inline UZPoly uz_add(const UZPoly& a, const UZPoly& b) {
    UZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    uz_trim(r);
    return r;
}

inline UZPoly uz_sub(const UZPoly& a, const UZPoly& b) {
    UZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uz_trim(r);
    return r;
}

inline UZPoly uz_mul(const UZPoly& a, const UZPoly& b) {
    if (a.empty() || b.empty()) return {};
    UZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline UZPoly uz_scale(const UZPoly& a, const BigInt& c) {
    if (c == 0) return {};
    UZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline BigInt uz_content(const UZPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

// Primitive part with positive leading coefficient.
inline UZPoly uz_primitive(const UZPoly& p, BigInt* content_out = nullptr) {
    if (p.empty()) {
        if (content_out) *content_out = 0;
        return {};
    }
    BigInt g = uz_content(p);
    if (p.back() < 0) g = -g;
    if (content_out) *content_out = g;
    UZPoly r = p;
    for (auto& x : r) x /= g;
    return r;
}

// Exact division; throws if the division does not come out even over Z.
inline UZPoly uz_divide_exact(const UZPoly& a, const UZPoly& b) {
    if (b.empty()) throw DomainError("division by the zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw DomainError("exact division failed (degree)");
    UZPoly rem = a;
    UZPoly q(a.size() - b.size() + 1, BigInt(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt top = rem[k + b.size() - 1];
        if (top == 0) continue;
        if (top % b.back() != 0) throw DomainError("exact division failed (coefficient)");
        BigInt c = top / b.back();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw DomainError("exact division failed (remainder)");
    uz_trim(q);
    return q;
}

inline bool uz_divides(const UZPoly& b, const UZPoly& a, UZPoly* quotient = nullptr) {
    try {
        UZPoly q = uz_divide_exact(a, b);
        if (quotient) *quotient = std::move(q);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
inline UZPoly uz_pseudo_rem(UZPoly a, const UZPoly& b) {
    if (b.empty()) throw DomainError("pseudo-remainder by zero");
    int da = uz_degree(a), db = uz_degree(b);
    if (da < db) {
        // Still multiply by the required power for a uniform contract.
        return a;
    }
    const BigInt& lb = b.back();
    for (int k = da; k >= db; --k) {
        BigInt top = (static_cast<std::size_t>(k) < a.size()) ? a[static_cast<std::size_t>(k)] : BigInt(0);
        for (auto& c : a) c *= lb;
        if (top != 0) {
            for (int j = 0; j <= db; ++j)
                a[static_cast<std::size_t>(k - db + j)] -= top * b[static_cast<std::size_t>(j)];
        }
        a.resize(static_cast<std::size_t>(k)); // degree strictly drops
        uz_trim(a);
        if (uz_degree(a) < db) break;
    }
    return a;
}

namespace detail {

inline bool small_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::int64_t next_prime(std::int64_t n) {
    do {
        ++n;
    } while (!small_prime(n));
    return n;
}

inline std::int64_t mod_of(const BigInt& x, std::int64_t p) {
    BigInt r = x % p;
    std::int64_t v = r.convert_to<std::int64_t>();
    return v < 0 ? v + p : v;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>((static_cast<unsigned __int128>(static_cast<std::uint64_t>(a)) * static_cast<std::uint64_t>(b)) % static_cast<std::uint64_t>(p));
}

inline std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::int64_t invmod(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

using ModPoly = std::vector<std::int64_t>; // c[i] on x^i, normalized

inline void mp_trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ModPoly mp_from(const UZPoly& f, std::int64_t p) {
    ModPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_of(f[i], p);
    mp_trim(r);
    return r;
}

// a := a mod b (b nonzero, monic-normalized on the fly).
inline void mp_mod_inplace(ModPoly& a, const ModPoly& b, std::int64_t p) {
    std::int64_t inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        std::int64_t c = mulmod(a.back(), inv, p);
        std::size_t off = a.size() - b.size();
        if (c != 0) {
            for (std::size_t j = 0; j + 1 < b.size(); ++j) {
                a[off + j] = (a[off + j] - mulmod(c, b[j], p)) % p;
                if (a[off + j] < 0) a[off + j] += p;
            }
        }
        a.pop_back();
        mp_trim(a);
    }
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, std::int64_t p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        mp_mod_inplace(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::int64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

} // namespace detail

// GCD over Z, primitive with positive leading coefficient. Uses a modular
// degree screen (sound: deg gcd over Q <= deg gcd mod p for p not dividing
// both leading coefficients) and falls back to the primitive PRS.
inline UZPoly uz_gcd(UZPoly a, UZPoly b) {
    uz_trim(a);
    uz_trim(b);
    if (a.empty()) return uz_primitive(b);
    if (b.empty()) return uz_primitive(a);
    BigInt ca, cb;
    a = uz_primitive(a, &ca);
    b = uz_primitive(b, &cb);
    BigInt cont = gcd(ca < 0 ? -ca : ca, cb < 0 ? -cb : cb);
    if (uz_degree(a) < uz_degree(b)) std::swap(a, b);

    // Modular screen: if the gcd is constant mod one good prime, it is
    // constant over Q.
    for (std::int64_t p = 101; p < 200; p = detail::next_prime(p)) {
        if (a.back() % p == 0 || b.back() % p == 0) continue;
        auto g = detail::mp_gcd(detail::mp_from(a, p), detail::mp_from(b, p), p);
        if (g.size() <= 1) {
            UZPoly r{cont};
            return r;
        }
        break;
    }

    while (!b.empty()) {
        UZPoly r = uz_pseudo_rem(a, b);
        a = std::move(b);
        b = uz_primitive(r);
    }
    a = uz_primitive(a);
    for (auto& c : a) c *= cont;
    return a;
}

// Yun's squarefree decomposition of a primitive polynomial: returns pairs
// (g_i, i) with f = lc-sign * prod g_i^i, each g_i squarefree and pairwise
// coprime; g_i with trivial content are omitted when equal to 1.
inline std::vector<std::pair<UZPoly, int>> uz_squarefree_decomposition(const UZPoly& f_in) {
    UZPoly f = uz_primitive(f_in);
    std::vector<std::pair<UZPoly, int>> out;
    if (uz_degree(f) < 1) return out;
    UZPoly fp = uz_derivative(f);
    UZPoly g = uz_gcd(f, fp);
    if (uz_degree(g) < 1) {
        out.emplace_back(f, 1);
        return out;
    }
    UZPoly c = uz_divide_exact(f, g);
    UZPoly d = uz_sub(uz_divide_exact(fp, g), uz_derivative(c));
    int i = 1;
    while (uz_degree(c) >= 1) {
        UZPoly a = uz_gcd(c, d);
        if (uz_degree(a) >= 1) out.emplace_back(a, i);
        UZPoly c2 = uz_divide_exact(c, a);
        d = uz_sub(uz_divide_exact(d, a), uz_derivative(c2));
        c = std::move(c2);
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer roots within [-B, B].

namespace detail {

inline void push_if_root(const UZPoly& p, const BigInt& r, const BigInt& B, std::vector<BigInt>& out) {
    if (abs(r) <= B && uz_eval(p, r) == 0) out.push_back(r);
}

} // namespace detail

// Exactly the integer roots of a nonzero univariate polynomial within
// [-B, B], ascending. The identically-zero polynomial is rejected so that
// callers can handle the full-fiber case themselves.
inline std::vector<BigInt> uz_integer_roots(UZPoly p, const BigInt& B) {
    uz_trim(p);
    if (p.empty()) throw DomainError("integer_roots of the identically zero polynomial");
    if (B < 0) throw DomainError("negative height bound");
    std::vector<BigInt> roots;
    // Strip the x^k factor.
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k > 0) {
        roots.push_back(BigInt(0));
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    }
    int d = uz_degree(p);
    if (d >= 1) {
        if (d == 1) {
            // c1 x + c0 = 0
            if (p[0] % p[1] == 0) detail::push_if_root(p, -p[0] / p[1], B, roots);
        } else if (d == 2) {
            BigInt disc = p[1] * p[1] - 4 * p[2] * p[0];
            if (disc >= 0 && is_perfect_square(disc)) {
                BigInt s = isqrt(disc);
                BigInt two_a = 2 * p[2];
                BigInt n1 = -p[1] + s, n2 = -p[1] - s;
                for (const BigInt& num : {n1, n2}) {
                    if (num % two_a == 0) detail::push_if_root(p, num / two_a, B, roots);
                }
            }
        } else {
            // Count the nonzero terms; a pure binomial c_d x^d + c_0 has a
            // closed-form root test.
            std::size_t nonzero = 0;
            for (const auto& c : p)
                if (c != 0) ++nonzero;
            if (nonzero == 2 && p[0] != 0) {
                if (p[0] % p.back() == 0) {
                    BigInt t = -p[0] / p.back();
                    BigInt r;
                    unsigned deg = static_cast<unsigned>(d);
                    if (exact_root(t, deg, r)) {
                        detail::push_if_root(p, r, B, roots);
                        if (deg % 2 == 0) detail::push_if_root(p, -r, B, roots);
                    }
                }
            } else {
                // Divisors of the trailing coefficient, clipped to [-B, B]
                // and to the Cauchy root bound.
                BigInt bound = B;
                BigInt maxc = 0;
                for (int i = 0; i < d; ++i) maxc = std::max(maxc, abs(p[static_cast<std::size_t>(i)]));
                BigInt cauchy = 1 + maxc / abs(p.back());
                if (cauchy < bound) bound = cauchy;
                for (BigInt m = 1; m <= bound; ++m) {
                    if (p[0] % m != 0) continue;
                    detail::push_if_root(p, m, B, roots);
                    detail::push_if_root(p, -m, B, roots);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Conversions between the sparse multivariate type (nvars = 1) and the
// dense univariate representation.
inline UZPoly uz_from_poly(const Poly& p) {
    if (p.nvars() != 1) throw DomainError("expected a univariate polynomial");
    UZPoly r;
    for (const auto& [m, c] : p.terms()) {
        std::size_t e = m.exponent(0);
        if (r.size() <= e) r.resize(e + 1, BigInt(0));
        r[e] = c;
    }
    uz_trim(r);
    return r;
}

inline Poly uz_to_poly(const UZPoly& p) {
    Poly r(1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        Monomial m(1);
        m.set_exponent(0, static_cast<std::uint32_t>(i));
        r.add_term(m, p[i]);
    }
    return r;
}

// The spec-facing operation on the sparse type.
inline std::vector<BigInt> integer_roots(const Poly& p, const BigInt& B) {
    return uz_integer_roots(uz_from_poly(p), B);
}

} // namespace hypercount
