#pragma once

#include <optional>
#include <utility>

#include "hypercount/linear_map.hpp"
#include "hypercount/poly.hpp"
#include "hypercount/unipoly.hpp"

namespace hypercount {

// Normal form of a ternary quadratic whose (x1,x2) quadratic part has rank
// two: scale * f(x) = a1*(z1 + b1*z3)^2 + a2*(z2 + b2*z3)^2 + q(z3) with
// z = transform(x), an invertible integer affine change fixing z3 = x3.
// Integer zero sets correspond bijectively under the transform.
struct TwoSquaresForm {
    BigInt a1, a2; // nonzero
    BigRat b1, b2;
    UZPoly q; // univariate in the third coordinate, degree <= 2
    LinearMap transform;
    BigInt scale = 1;

    // The normal form as a polynomial N(z1,z2,z3); scale*f = N(transform(x)).
    Poly normal_form() const {
        QPoly z1(3), z2(3), z3(3);
        Monomial m1(3), m2(3), m3(3);
        m1.set_exponent(0, 1);
        m2.set_exponent(1, 1);
        m3.set_exponent(2, 1);
        z1.add_term(m1, BigRat(1));
        z2.add_term(m2, BigRat(1));
        z3.add_term(m3, BigRat(1));
        QPoly s1 = z1 + z3 * b1;
        QPoly s2 = z2 + z3 * b2;
        QPoly acc = s1 * s1 * BigRat(a1) + s2 * s2 * BigRat(a2);
        for (std::size_t i = 0; i < q.size(); ++i) {
            QPoly t = QPoly::constant(3, BigRat(q[i]));
            for (std::size_t j = 0; j < i; ++j) t = t * z3;
            acc = acc + t;
        }
        Poly out(3);
        for (const auto& [m, c] : acc.terms()) {
            if (denominator(c) != 1) throw InternalError("normal form is not integral");
            out.add_term(m, numerator(c));
        }
        return out;
    }

    // Discriminant test on the leading binary pair a1*u^2 + a2*v^2.
    bool leading_pair_anisotropic() const { return !is_perfect_square(-a1 * a2); }
};

namespace detail {

struct QuadCoeffs {
    BigInt c11, c12, c22, c13, c23, c33, c1, c2, c3, c0;
};

inline QuadCoeffs quad_coeffs(const Poly& f) {
    QuadCoeffs c;
    c.c11 = f.coefficient(Monomial({2, 0, 0}));
    c.c12 = f.coefficient(Monomial({1, 1, 0}));
    c.c22 = f.coefficient(Monomial({0, 2, 0}));
    c.c13 = f.coefficient(Monomial({1, 0, 1}));
    c.c23 = f.coefficient(Monomial({0, 1, 1}));
    c.c33 = f.coefficient(Monomial({0, 0, 2}));
    c.c1 = f.coefficient(Monomial({1, 0, 0}));
    c.c2 = f.coefficient(Monomial({0, 1, 0}));
    c.c3 = f.coefficient(Monomial({0, 0, 1}));
    c.c0 = f.coefficient(Monomial({0, 0, 0}));
    return c;
}

} // namespace detail

// Executable reduction of a ternary quadratic with rank-two (x1,x2) part to
// the two-squares normal form, via integer coordinate changes only.
inline TwoSquaresForm reduce_to_two_squares(const Poly& f) {
    if (f.nvars() != 3) throw DomainError("reduction expects exactly three variables");
    if (f.is_zero() || f.degree_or_throw() != 2) throw DomainError("reduction expects a quadratic polynomial");

    auto c0 = detail::quad_coeffs(f);
    BigInt disc0 = c0.c12 * c0.c12 - 4 * c0.c11 * c0.c22;
    if (disc0 == 0) throw DomainError("the (x1,x2) quadratic part must have rank two");

    Poly g = f;
    LinearMap total = LinearMap::identity(3);

    // Make c11 nonzero: swap x1,x2 if that suffices, else shear the
    // hyperbolic case (c11 = c22 = 0, c12 != 0) first.
    auto c = detail::quad_coeffs(g);
    if (c.c11 == 0) {
        LinearMap step = LinearMap::identity(3);
        if (c.c22 != 0) {
            step.matrix(0, 0) = 0;
            step.matrix(0, 1) = 1;
            step.matrix(1, 0) = 1;
            step.matrix(1, 1) = 0;
        } else {
            // y1 = x1, y2 = x2 - x1, so that x2 = y1 + y2 and the cross term
            // produces a y1^2 coefficient.
            step.matrix(1, 0) = -1;
        }
        g = apply_linear_map(g, step);
        total = step.after(total);
        c = detail::quad_coeffs(g);
    }

    // Eliminate the cross term via z1 = 2*c11*x1 + c12*x2 at scale 4*c11^2.
    if (c.c12 != 0) {
        LinearMap step = LinearMap::identity(3);
        step.matrix(0, 0) = 2 * c.c11;
        step.matrix(0, 1) = c.c12;
        step.scale = 4 * c.c11 * c.c11;
        g = apply_linear_map(g, step);
        total = step.after(total);
        c = detail::quad_coeffs(g);
    }

    if (c.c11 == 0 || c.c22 == 0 || c.c12 != 0)
        throw InternalError("cross-term elimination failed to produce a diagonal rank-two part");

    // Complete each square as needed; untouched coordinates stay unscaled.
    bool s1 = (c.c13 != 0 || c.c1 != 0);
    bool s2 = (c.c23 != 0 || c.c2 != 0);
    BigInt mu = (s1 ? 4 * c.c11 : BigInt(1)) * (s2 ? 4 * c.c22 : BigInt(1));

    TwoSquaresForm out;
    out.a1 = s1 ? mu / (4 * c.c11) : mu * c.c11;
    out.a2 = s2 ? mu / (4 * c.c22) : mu * c.c22;
    out.b1 = s1 ? BigRat(c.c13) : BigRat(0);
    out.b2 = s2 ? BigRat(c.c23) : BigRat(0);

    LinearMap step = LinearMap::identity(3);
    if (s1) {
        step.matrix(0, 0) = 2 * c.c11;
        step.shift[0] = c.c1;
    }
    if (s2) {
        step.matrix(1, 1) = 2 * c.c22;
        step.shift[1] = c.c2;
    }
    step.scale = mu;
    out.transform = step.after(total);
    out.scale = out.transform.scale;

    // q collects the x3-only terms minus the square-completion remainders.
    UZPoly q{mu * c.c0, mu * c.c3, mu * c.c33};
    if (s1) {
        BigInt k = mu / (4 * c.c11);
        // (c13*x3 + c1)^2 = c13^2 x3^2 + 2 c13 c1 x3 + c1^2
        q[0] -= k * c.c1 * c.c1;
        q[1] -= k * 2 * c.c13 * c.c1;
        q[2] -= k * c.c13 * c.c13;
    }
    if (s2) {
        BigInt k = mu / (4 * c.c22);
        q[0] -= k * c.c2 * c.c2;
        q[1] -= k * 2 * c.c23 * c.c2;
        q[2] -= k * c.c23 * c.c23;
    }
    uz_trim(q);
    out.q = q;

    // Exact re-verification of the whole identity.
    Poly lhs = f * out.scale;
    Poly rhs = substitute_affine(out.normal_form(), out.transform.matrix, out.transform.shift);
    if (lhs != rhs) throw InternalError("two-squares identity failed to re-verify");
    return out;
}

// With an anisotropic leading pair, every slice x3 = k carries finitely many
// integer solutions; when q(k) = 0 the only rational solution is the forced
// point z1 = -b1*k, z2 = -b2*k, returned as a witness.
struct SliceGuarantee {
    bool holds = false;
    std::optional<std::pair<BigRat, BigRat>> forced;
};

inline SliceGuarantee anisotropic_slice_guarantee(const TwoSquaresForm& form, const BigInt& k) {
    if (!form.leading_pair_anisotropic())
        throw DomainError("slice guarantee requires an anisotropic leading pair");
    SliceGuarantee g;
    g.holds = true;
    if (uz_is_zero(form.q) || uz_eval(form.q, k) == 0) {
        g.forced = std::make_pair(-form.b1 * BigRat(k), -form.b2 * BigRat(k));
    }
    return g;
}

} // namespace hypercount
