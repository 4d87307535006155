#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercount/geom.hpp"
#include "hypercount/poly.hpp"

namespace hypercount {

enum class Tri { yes, no, not_computed };

inline std::string to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        case Tri::not_computed: return "not_computed";
    }
    return "?";
}

// Symmetric-matrix view of a quadratic form: rank over Q, the binary
// discriminant c12^2 - 4 c11 c22 when the form is binary, and the
// anisotropy verdict for binary forms.
struct QuadInfo {
    QMat gram;
    int rank = 0;
    std::optional<BigInt> disc_binary;
    Tri anisotropic = Tri::not_computed;
};

// Gram matrix over Q of a homogeneous quadratic (the zero form is allowed).
inline QMat gram_matrix(const Poly& q) {
    int n = q.nvars();
    QMat g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (const auto& [m, c] : q.terms()) {
        int a = -1, b = -1;
        for (int i = 0; i < n; ++i) {
            for (std::uint32_t k = 0; k < m.exponent(i); ++k) {
                if (a < 0)
                    a = i;
                else
                    b = i;
            }
        }
        if (a == b) {
            g(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = BigRat(c);
        } else {
            BigRat half(c, 2);
            g(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = half;
            g(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = half;
        }
    }
    return g;
}

inline void check_quadratic_form(const Poly& q) {
    if (q.is_zero()) return;
    if (!q.is_homogeneous() || q.degree_or_throw() != 2)
        throw DomainError("expected a homogeneous quadratic form");
}

inline QuadInfo quad_info(const Poly& q) {
    check_quadratic_form(q);
    QuadInfo info;
    info.gram = gram_matrix(q);
    // Fraction-free rank on the doubled (integer) Gram matrix.
    IMat doubled(info.gram.rows, info.gram.cols);
    for (std::size_t i = 0; i < info.gram.rows; ++i)
        for (std::size_t j = 0; j < info.gram.cols; ++j) {
            BigRat v = info.gram(i, j) * 2;
            doubled(i, j) = numerator(v); // denominators are 1 after doubling
        }
    info.rank = static_cast<int>(rank_fraction_free(doubled));
    if (q.nvars() == 2) {
        BigInt c11 = q.coefficient(Monomial({2, 0}));
        BigInt c12 = q.coefficient(Monomial({1, 1}));
        BigInt c22 = q.coefficient(Monomial({0, 2}));
        info.disc_binary = c12 * c12 - 4 * c11 * c22;
        info.anisotropic = (!q.is_zero() && !is_perfect_square(*info.disc_binary)) ? Tri::yes : Tri::no;
    }
    return info;
}

// Rank-two ternary forms split over Q iff the nondegenerate binary quotient
// is isotropic; rank-three forms are irreducible outright.
inline bool ternary_quadratic_form_irreducible(const Poly& q) {
    if (q.nvars() != 3) throw DomainError("expected a ternary form");
    QuadInfo info = quad_info(q);
    if (info.rank >= 3) return true;
    if (info.rank <= 1) return false;
    // Restrict to a complement of the radical.
    QMat g2(info.gram.rows, info.gram.cols);
    for (std::size_t i = 0; i < info.gram.a.size(); ++i) g2.a[i] = info.gram.a[i];
    auto rad = kernel_basis(std::move(g2));
    // rad has dimension 1; pick two coordinate vectors completing it.
    std::vector<std::vector<BigRat>> span = rad;
    std::vector<std::vector<BigRat>> comp;
    for (int i = 0; i < 3 && comp.size() < 2; ++i) {
        std::vector<BigRat> e(3, BigRat(0));
        e[static_cast<std::size_t>(i)] = 1;
        auto trial = span;
        trial.insert(trial.end(), comp.begin(), comp.end());
        if (!in_span(trial, e)) comp.push_back(e);
    }
    if (comp.size() != 2) throw InternalError("failed to complement the radical");
    IMat p(3, 2);
    for (std::size_t j = 0; j < 2; ++j) {
        auto v = primitive_integer_vector(comp[j]);
        for (std::size_t i = 0; i < 3; ++i) p(i, j) = v[i];
    }
    Poly restricted = substitute_matrix(q, p);
    QuadInfo bi = quad_info(restricted);
    return bi.anisotropic == Tri::yes;
}

enum class LineSearchMode { transversal, no_rational_point };

inline std::string to_string(LineSearchMode m) {
    return m == LineSearchMode::transversal ? "transversal" : "no_rational_point";
}

// A certified linear form for the conic/line conditions: the restriction of
// the form to the plane L = 0 together with its binary discriminant.
struct LinearFormCertificate {
    std::vector<BigInt> coeffs; // L = c1 x1 + c2 x2 + c3 x3
    IMat plane_basis;           // columns u, v span {L = 0}
    BigInt r11, r12, r22;       // Q restricted: r11 s^2 + r12 s t + r22 t^2
    BigInt disc;                // r12^2 - 4 r11 r22
    LineSearchMode mode = LineSearchMode::transversal;

    bool satisfies_mode() const {
        return mode == LineSearchMode::transversal ? disc != 0 : !is_perfect_square(disc);
    }
};

namespace detail {

// Shell enumeration values in the order 0, 1, -1, 2, -2, ...
inline std::int64_t shell_value(std::int64_t idx) { return (idx % 2 == 1) ? (idx + 1) / 2 : -idx / 2; }

} // namespace detail

// Searches integer linear forms by increasing max-norm then lexicographic
// order (coordinate values ordered 0, 1, -1, 2, -2, ...; first nonzero
// coefficient positive) for one whose plane meets the conic transversally
// (mode transversal) or misses all of its rational points (mode
// no_rational_point). Certified exactly; throws after exhausting max-norm C.
inline LinearFormCertificate search_linear_form(const Poly& q, LineSearchMode mode, int search_bound = 16) {
    if (q.nvars() != 3) throw DomainError("line search expects a ternary quadratic form");
    check_quadratic_form(q);
    QuadInfo info = quad_info(q);
    if (info.rank < 2) throw DomainError("line search requires a form of rank at least two");
    if (mode == LineSearchMode::no_rational_point && !ternary_quadratic_form_irreducible(q))
        throw DomainError("no_rational_point mode requires an irreducible form");

    for (int shell = 1; shell <= search_bound; ++shell) {
        std::int64_t width = 2 * static_cast<std::int64_t>(shell) + 1;
        for (std::int64_t i1 = 0; i1 < width; ++i1) {
            for (std::int64_t i2 = 0; i2 < width; ++i2) {
                for (std::int64_t i3 = 0; i3 < width; ++i3) {
                    std::int64_t c1 = detail::shell_value(i1);
                    std::int64_t c2 = detail::shell_value(i2);
                    std::int64_t c3 = detail::shell_value(i3);
                    std::int64_t norm = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
                    if (norm != shell) continue;
                    std::int64_t first = c1 != 0 ? c1 : (c2 != 0 ? c2 : c3);
                    if (first < 0) continue; // L and -L define the same plane
                    LinearFormCertificate cert;
                    cert.coeffs = {BigInt(c1), BigInt(c2), BigInt(c3)};
                    cert.mode = mode;
                    cert.plane_basis = hyperplane_parametrization(cert.coeffs);
                    Poly restricted = substitute_matrix(q, cert.plane_basis);
                    cert.r11 = restricted.coefficient(Monomial({2, 0}));
                    cert.r12 = restricted.coefficient(Monomial({1, 1}));
                    cert.r22 = restricted.coefficient(Monomial({0, 2}));
                    cert.disc = cert.r12 * cert.r12 - 4 * cert.r11 * cert.r22;
                    if (cert.satisfies_mode()) return cert;
                }
            }
        }
    }
    throw DeskScaleError("line search exhausted all integer forms with max-norm up to " +
                         std::to_string(search_bound) + "; raise the search bound");
}

// Independent re-verification of a certificate: the restriction is
// recomputed from scratch through Gram-style evaluations of the form.
inline bool verify_linear_form_certificate(const Poly& q, const LinearFormCertificate& cert) {
    // L must vanish on both basis columns.
    for (std::size_t j = 0; j < cert.plane_basis.cols; ++j) {
        BigInt s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += cert.coeffs[i] * cert.plane_basis(i, j);
        if (s != 0) return false;
    }
    // Basis must span a plane.
    IMat b(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) b(i, j) = cert.plane_basis(i, j);
    if (rank_fraction_free(b) != 2) return false;
    // Restriction coefficients via evaluation: Q(u), Q(v), Q(u+v)-Q(u)-Q(v).
    std::vector<BigInt> u(3), v(3), w(3);
    for (std::size_t i = 0; i < 3; ++i) {
        u[i] = cert.plane_basis(i, 0);
        v[i] = cert.plane_basis(i, 1);
        w[i] = u[i] + v[i];
    }
    BigInt qu = q.eval(u), qv = q.eval(v), qw = q.eval(w);
    if (qu != cert.r11 || qv != cert.r22 || qw - qu - qv != cert.r12) return false;
    BigInt disc = cert.r12 * cert.r12 - 4 * cert.r11 * cert.r22;
    if (disc != cert.disc) return false;
    return cert.satisfies_mode();
}

} // namespace hypercount
