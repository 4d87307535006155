#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hypercount/poly.hpp"
#include "hypercount/unipoly.hpp"

namespace hypercount {

enum class CountMethod { naive, solved, sliced };

inline std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::naive: return "naive";
        case CountMethod::solved: return "solved";
        case CountMethod::sliced: return "sliced";
    }
    return "?";
}

// Exact count of integer n-tuples in [-B,B]^n at which f vanishes.
struct CountResult {
    BigInt count;
    std::int64_t B = 0;
    CountMethod method = CountMethod::naive;
    std::optional<int> pivot;                                             // solved engine only
    std::optional<std::vector<std::pair<std::int64_t, BigInt>>> slice_breakdown; // sliced engine only
    double elapsed_ms = 0.0;
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Deterministic parallel map over the closed range [lo, hi]: results are
// indexed by slice value, so aggregation order never depends on scheduling.
template <class Fn>
inline std::vector<BigInt> map_slices(std::int64_t lo, std::int64_t hi, int threads, Fn&& fn) {
    std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    std::vector<BigInt> results(n);
    if (threads < 1) threads = 1;
    threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) results[i] = fn(lo + static_cast<std::int64_t>(i));
        return results;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = static_cast<std::size_t>(t); i < n; i += static_cast<std::size_t>(threads))
                    results[i] = fn(lo + static_cast<std::int64_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

// Flattened term list for repeated evaluation, optionally specialized to
// int64 when an exact a-priori bound certifies that no intermediate can
// overflow.
template <class V>
struct Evaluator {
    int nvars = 0;
    std::vector<V> coeffs;
    std::vector<std::uint32_t> exps; // stride nvars
    std::vector<std::uint32_t> maxdeg;

    explicit Evaluator(const Poly& f) : nvars(f.nvars()), maxdeg(static_cast<std::size_t>(f.nvars()), 0) {
        for (const auto& [m, c] : f.terms()) {
            coeffs.push_back(V(c));
            for (int i = 0; i < nvars; ++i) {
                std::uint32_t e = m.exponent(i);
                exps.push_back(e);
                maxdeg[static_cast<std::size_t>(i)] = std::max(maxdeg[static_cast<std::size_t>(i)], e);
            }
        }
    }

    // pow_scratch must have nvars rows; rows are resized as needed.
    V eval(const std::vector<V>& pt, std::vector<std::vector<V>>& pow_scratch) const {
        for (int i = 0; i < nvars; ++i) {
            auto& tab = pow_scratch[static_cast<std::size_t>(i)];
            tab.assign(1, V(1));
            for (std::uint32_t k = 1; k <= maxdeg[static_cast<std::size_t>(i)]; ++k)
                tab.push_back(tab.back() * pt[static_cast<std::size_t>(i)]);
        }
        V acc(0);
        const std::uint32_t* e = exps.data();
        for (std::size_t t = 0; t < coeffs.size(); ++t, e += nvars) {
            V v = coeffs[t];
            for (int i = 0; i < nvars; ++i)
                if (e[i]) v *= pow_scratch[static_cast<std::size_t>(i)][e[i]];
            acc += v;
        }
        return acc;
    }
};

// Sum over all terms of |c| * B^deg: a bound for every intermediate of a
// Horner-style evaluation anywhere in [-B,B]^n.
inline BigInt eval_bound(const Poly& f, std::int64_t B) {
    BigInt acc = 0;
    BigInt b(B);
    for (const auto& [m, c] : f.terms()) acc += abs(c) * pow(b, static_cast<unsigned>(m.total_degree()));
    return acc;
}

constexpr std::int64_t kInt64SafeBound = std::int64_t(1) << 61;

inline std::int64_t isqrt_i128(unsigned __int128 n) {
    if (n == 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * static_cast<unsigned __int128>(r) > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * static_cast<unsigned __int128>(r + 1) <= n) ++r;
    return r;
}

// Number of integer roots within [-B, B] of a univariate int64 polynomial
// whose evaluations are certified to fit in int64. Returns -1 for the
// identically zero polynomial.
inline std::int64_t int64_root_count(std::vector<std::int64_t>& c, std::int64_t B) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return -1;
    auto horner = [&](std::int64_t x) {
        std::int64_t acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    std::int64_t found = 0;
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    if (k > 0) {
        ++found; // root at 0
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
    }
    int d = static_cast<int>(c.size()) - 1;
    if (d == 0) return found;
    if (d == 1) {
        if (c[0] % c[1] == 0) {
            std::int64_t r = -c[0] / c[1];
            if (r >= -B && r <= B && r != 0) ++found;
        }
        return found;
    }
    if (d == 2) {
        __int128 disc = static_cast<__int128>(c[1]) * c[1] - static_cast<__int128>(4) * c[2] * c[0];
        if (disc < 0) return found;
        std::int64_t s = isqrt_i128(static_cast<unsigned __int128>(disc));
        if (static_cast<__int128>(s) * s != disc) return found;
        std::int64_t two_a = 2 * c[2];
        for (std::int64_t num : {-c[1] + s, -c[1] - s}) {
            if (num % two_a == 0) {
                std::int64_t r = num / two_a;
                if (r >= -B && r <= B && r != 0 && horner(r) == 0) ++found;
            }
            if (disc == 0) break; // double root, count once
        }
        return found;
    }
    // Binomial fast path: c_d x^d + c_0.
    std::size_t nonzero = 0;
    for (auto v : c)
        if (v != 0) ++nonzero;
    if (nonzero == 2 && c[0] != 0) {
        if (c[0] % c.back() != 0) return found;
        BigInt t = BigInt(-c[0]) / c.back();
        BigInt r;
        if (!exact_root(t, static_cast<unsigned>(d), r)) return found;
        if (abs(r) <= B) {
            std::int64_t ri = r.convert_to<std::int64_t>();
            if (ri != 0 && horner(ri) == 0) ++found;
            if (d % 2 == 0 && ri != 0 && horner(-ri) == 0) ++found;
        }
        return found;
    }
    // Divisors of the trailing coefficient, clipped to the box and to the
    // Cauchy bound.
    std::int64_t maxc = 0;
    for (int i = 0; i < d; ++i) maxc = std::max(maxc, std::abs(c[static_cast<std::size_t>(i)]));
    std::int64_t lead = std::abs(c.back());
    std::int64_t bound = std::min<std::int64_t>(B, 1 + maxc / lead);
    for (std::int64_t m = 1; m <= bound; ++m) {
        if (c[0] % m != 0) continue;
        if (horner(m) == 0) ++found;
        if (horner(-m) == 0) ++found;
    }
    return found;
}

// BigInt fallback: -1 encodes the identically zero slice.
inline std::int64_t bigint_root_count(UZPoly& p, std::int64_t B) {
    uz_trim(p);
    if (p.empty()) return -1;
    return static_cast<std::int64_t>(uz_integer_roots(p, BigInt(B)).size());
}

inline void check_nonzero(const Poly& f) {
    if (f.is_zero()) throw DomainError("the zero polynomial is rejected by the counting engines");
}

inline BigInt box_size(std::int64_t B, int dims) {
    return pow(BigInt(2 * B + 1), static_cast<unsigned>(dims));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Naive engine: full enumeration of the box; the ground-truth oracle.

inline CountResult count_naive(const Poly& f, std::int64_t B, int threads = 1) {
    detail::check_nonzero(f);
    if (B < 0) throw DomainError("negative height bound");
    detail::Stopwatch sw;
    int n = f.nvars();
    BigInt cells = detail::box_size(B, n);
    if (cells > 100000000) throw DeskScaleError("naive enumeration refused: box has " + cells.str() + " cells (cap 1e8)");
    std::int64_t width = 2 * B + 1;
    bool use_int64 = detail::eval_bound(f, B) < detail::kInt64SafeBound;

    BigInt total = 0;
    if (use_int64) {
        detail::Evaluator<std::int64_t> ev(f);
        auto per_slice = [&](std::int64_t x1) {
            std::vector<std::int64_t> pt(static_cast<std::size_t>(n), -B);
            std::vector<std::vector<std::int64_t>> scratch(static_cast<std::size_t>(n));
            pt[0] = x1;
            std::int64_t hits = 0;
            for (;;) {
                if (ev.eval(pt, scratch) == 0) ++hits;
                int i = n - 1;
                for (; i >= 1; --i) {
                    if (pt[static_cast<std::size_t>(i)] < B) {
                        ++pt[static_cast<std::size_t>(i)];
                        break;
                    }
                    pt[static_cast<std::size_t>(i)] = -B;
                }
                if (i == 0) break;
            }
            return BigInt(hits);
        };
        if (n == 1) {
            std::int64_t hits = 0;
            std::vector<std::int64_t> pt(1);
            std::vector<std::vector<std::int64_t>> scratch(1);
            for (std::int64_t x = -B; x <= B; ++x) {
                pt[0] = x;
                if (ev.eval(pt, scratch) == 0) ++hits;
            }
            total = hits;
        } else {
            auto parts = detail::map_slices(-B, B, threads, per_slice);
            for (const auto& p : parts) total += p;
        }
        (void)width;
    } else {
        detail::Evaluator<BigInt> ev(f);
        auto per_slice = [&](std::int64_t x1) {
            std::vector<BigInt> pt(static_cast<std::size_t>(n), BigInt(-B));
            std::vector<std::vector<BigInt>> scratch(static_cast<std::size_t>(n));
            pt[0] = x1;
            BigInt hits = 0;
            for (;;) {
                if (ev.eval(pt, scratch) == 0) ++hits;
                int i = n - 1;
                for (; i >= 1; --i) {
                    if (pt[static_cast<std::size_t>(i)] < B) {
                        ++pt[static_cast<std::size_t>(i)];
                        break;
                    }
                    pt[static_cast<std::size_t>(i)] = -B;
                }
                if (i == 0) break;
            }
            return hits;
        };
        if (n == 1) {
            std::vector<BigInt> pt(1);
            std::vector<std::vector<BigInt>> scratch(1);
            for (std::int64_t x = -B; x <= B; ++x) {
                pt[0] = BigInt(x);
                if (ev.eval(pt, scratch) == 0) ++total;
            }
        } else {
            auto parts = detail::map_slices(-B, B, threads, per_slice);
            for (const auto& p : parts) total += p;
        }
    }

    CountResult r;
    r.count = total;
    r.B = B;
    r.method = CountMethod::naive;
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// Solved engine: enumerate all but one coordinate and solve for the pivot.

// Coefficient polynomials of f viewed as univariate in the pivot: entry k is
// the coefficient of pivot^k, a polynomial in the remaining n-1 variables.
inline std::vector<Poly> coefficient_polys(const Poly& f, int pivot) {
    int n = f.nvars();
    int d = f.degree_in(pivot).value_or(0);
    std::vector<Poly> out(static_cast<std::size_t>(d) + 1, Poly(n - 1));
    for (const auto& [m, c] : f.terms()) {
        std::uint32_t e = m.exponent(pivot - 1);
        Monomial sq(n - 1);
        int j = 0;
        for (int i = 0; i < n; ++i) {
            if (i == pivot - 1) continue;
            sq.set_exponent(j++, m.exponent(i));
        }
        out[e].add_term(sq, c);
    }
    return out;
}

// Default pivot: the variable whose leading-coefficient polynomial has the
// fewest terms (fewest degenerate slices), ties to the lowest index.
inline int default_pivot(const Poly& f) {
    int best = -1;
    std::size_t best_terms = 0;
    for (int v = 1; v <= f.nvars(); ++v) {
        int dv = f.degree_in(v).value_or(0);
        if (dv < 1) continue;
        auto coeffs = coefficient_polys(f, v);
        std::size_t t = coeffs.back().term_count();
        if (best == -1 || t < best_terms) {
            best = v;
            best_terms = t;
        }
    }
    if (best == -1) throw DomainError("no variable to solve for: polynomial is constant");
    return best;
}

inline CountResult count_solved(const Poly& f, std::int64_t B, std::optional<int> pivot_opt = std::nullopt,
                                int threads = 1) {
    detail::check_nonzero(f);
    if (B < 0) throw DomainError("negative height bound");
    detail::Stopwatch sw;
    int n = f.nvars();
    CountResult r;
    r.B = B;
    r.method = CountMethod::solved;

    if (f.is_constant()) {
        // Nonzero constant: no solutions anywhere.
        r.count = 0;
        r.elapsed_ms = sw.elapsed_ms();
        return r;
    }
    int pivot = pivot_opt ? *pivot_opt : default_pivot(f);
    if (pivot < 1 || pivot > n) throw DomainError("pivot index out of range");
    r.pivot = pivot;
    std::int64_t width = 2 * B + 1;

    if (f.degree_in(pivot).value_or(0) < 1) {
        // f does not involve the pivot: every零 slice of the remaining
        // coordinates carries the full fiber.
        Poly g = f.substitute_var(pivot, BigInt(0));
        CountResult inner = count_naive(g, B, threads);
        r.count = inner.count * width;
        r.elapsed_ms = sw.elapsed_ms();
        return r;
    }

    auto coeff_polys = coefficient_polys(f, pivot);
    int m = n - 1;
    if (m == 0) {
        // Univariate: one slice, solved directly.
        UZPoly p = uz_from_poly(f);
        std::int64_t rc = detail::bigint_root_count(p, B);
        r.count = rc < 0 ? BigInt(width) : BigInt(rc);
        r.elapsed_ms = sw.elapsed_ms();
        return r;
    }

    bool use_int64 = detail::eval_bound(f, B) < detail::kInt64SafeBound;
    BigInt total = 0;
    if (use_int64) {
        std::vector<detail::Evaluator<std::int64_t>> evs;
        evs.reserve(coeff_polys.size());
        for (const auto& cp : coeff_polys) evs.emplace_back(cp);
        auto per_slice = [&](std::int64_t first) {
            std::vector<std::int64_t> pt(static_cast<std::size_t>(m), -B);
            std::vector<std::vector<std::int64_t>> scratch(static_cast<std::size_t>(m));
            std::vector<std::int64_t> uc(evs.size());
            pt[0] = first;
            BigInt hits = 0;
            for (;;) {
                for (std::size_t k = 0; k < evs.size(); ++k) uc[k] = evs[k].eval(pt, scratch);
                std::vector<std::int64_t> tmp = uc;
                std::int64_t rc = detail::int64_root_count(tmp, B);
                hits += rc < 0 ? width : rc;
                int i = m - 1;
                for (; i >= 1; --i) {
                    if (pt[static_cast<std::size_t>(i)] < B) {
                        ++pt[static_cast<std::size_t>(i)];
                        break;
                    }
                    pt[static_cast<std::size_t>(i)] = -B;
                }
                if (i == 0) break;
            }
            return hits;
        };
        auto parts = detail::map_slices(-B, B, threads, per_slice);
        for (const auto& p : parts) total += p;
    } else {
        std::vector<detail::Evaluator<BigInt>> evs;
        evs.reserve(coeff_polys.size());
        for (const auto& cp : coeff_polys) evs.emplace_back(cp);
        auto per_slice = [&](std::int64_t first) {
            std::vector<BigInt> pt(static_cast<std::size_t>(m), BigInt(-B));
            std::vector<std::vector<BigInt>> scratch(static_cast<std::size_t>(m));
            pt[0] = BigInt(first);
            BigInt hits = 0;
            for (;;) {
                UZPoly uc(evs.size());
                for (std::size_t k = 0; k < evs.size(); ++k) uc[k] = evs[k].eval(pt, scratch);
                std::int64_t rc = detail::bigint_root_count(uc, B);
                hits += rc < 0 ? width : rc;
                int i = m - 1;
                for (; i >= 1; --i) {
                    if (pt[static_cast<std::size_t>(i)] < B) {
                        ++pt[static_cast<std::size_t>(i)];
                        break;
                    }
                    pt[static_cast<std::size_t>(i)] = -B;
                }
                if (i == 0) break;
            }
            return hits;
        };
        auto parts = detail::map_slices(-B, B, threads, per_slice);
        for (const auto& p : parts) total += p;
    }

    r.count = total;
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

// ---------------------------------------------------------------------------
// Sliced engine: recursion over hyperplane sections x_n = b.

namespace detail {

inline BigInt count_sliced_rec(const Poly& f, std::int64_t B) {
    if (f.is_zero()) return box_size(B, f.nvars());
    if (f.nvars() == 1) {
        UZPoly p = uz_from_poly(f);
        std::int64_t rc = bigint_root_count(p, B);
        return rc < 0 ? BigInt(2 * B + 1) : BigInt(rc);
    }
    if (f.is_constant()) return 0; // nonzero constant in >1 variables
    BigInt total = 0;
    for (std::int64_t b = -B; b <= B; ++b) total += count_sliced_rec(f.substitute_var(f.nvars(), BigInt(b)), B);
    return total;
}

} // namespace detail

inline CountResult count_sliced(const Poly& f, std::int64_t B, int threads = 1) {
    detail::check_nonzero(f);
    if (B < 0) throw DomainError("negative height bound");
    detail::Stopwatch sw;
    CountResult r;
    r.B = B;
    r.method = CountMethod::sliced;

    if (f.nvars() < 2) {
        r.count = detail::count_sliced_rec(f, B);
        r.elapsed_ms = sw.elapsed_ms();
        return r;
    }
    auto parts = detail::map_slices(-B, B, threads, [&](std::int64_t b) {
        return detail::count_sliced_rec(f.substitute_var(f.nvars(), BigInt(b)), B);
    });
    std::vector<std::pair<std::int64_t, BigInt>> breakdown;
    breakdown.reserve(parts.size());
    BigInt total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::int64_t b = -B + static_cast<std::int64_t>(i);
        breakdown.emplace_back(b, parts[i]);
        total += parts[i];
    }
    r.count = total;
    r.slice_breakdown = std::move(breakdown);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

inline CountResult count_with_engine(const Poly& f, std::int64_t B, CountMethod method,
                                     std::optional<int> pivot = std::nullopt, int threads = 1) {
    switch (method) {
        case CountMethod::naive: return count_naive(f, B, threads);
        case CountMethod::solved: return count_solved(f, B, pivot, threads);
        case CountMethod::sliced: return count_sliced(f, B, threads);
    }
    throw DomainError("unknown engine");
}

} // namespace hypercount
