#pragma once

#include <vector>

#include "hypercount/linalg.hpp"
#include "hypercount/poly.hpp"

namespace hypercount {

// An affine substitution y = Mx + s together with a scalar, recording a
// coordinate change under which scale * f_old(x) = f_new(Mx + s).
struct LinearMap {
    IMat matrix;              // m x n
    std::vector<BigInt> shift; // length m
    BigInt scale = 1;          // nonzero

    static LinearMap identity(int n) {
        LinearMap t;
        t.matrix = IMat::identity(static_cast<std::size_t>(n));
        t.shift.assign(static_cast<std::size_t>(n), BigInt(0));
        t.scale = 1;
        return t;
    }

    std::vector<BigInt> apply(const std::vector<BigInt>& x) const {
        auto y = matrix.mul_vec(x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += shift[i];
        return y;
    }

    // Composition: (this after inner), i.e. x -> this(inner(x)).
    LinearMap after(const LinearMap& inner) const {
        LinearMap t;
        t.matrix = matrix * inner.matrix;
        t.shift = matrix.mul_vec(inner.shift);
        for (std::size_t i = 0; i < t.shift.size(); ++i) t.shift[i] += shift[i];
        t.scale = scale * inner.scale;
        return t;
    }

    bool operator==(const LinearMap& o) const {
        return matrix == o.matrix && shift == o.shift && scale == o.scale;
    }
};

// f composed with the affine map: returns f(Mx + s) as a polynomial in x.
inline Poly substitute_affine(const Poly& f, const IMat& m, const std::vector<BigInt>& shift) {
    if (m.rows != static_cast<std::size_t>(f.nvars())) throw DomainError("substitution rows do not match arity");
    std::vector<std::vector<BigInt>> rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        rows[i].resize(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = m(i, j);
    }
    return compose_linear(f, rows, shift.empty() ? nullptr : &shift);
}

// Restriction of f to the image of an integer matrix: x = P y.
inline Poly substitute_matrix(const Poly& f, const IMat& p) {
    return substitute_affine(f, p, {});
}

// The polynomial g in the new coordinates determined by an invertible
// change: g satisfies scale * f(x) = g(Mx + s) as an exact identity. Throws
// if M is singular or the scaled result fails to be integral.
inline Poly apply_linear_map(const Poly& f, const LinearMap& t) {
    if (t.matrix.rows != t.matrix.cols || t.matrix.rows != static_cast<std::size_t>(f.nvars()))
        throw DomainError("coordinate change must be square and match the arity");
    if (t.scale == 0) throw DomainError("zero scale in coordinate change");
    QMat minv = inverse(to_rational(t.matrix)); // throws if singular
    // x = M^-1 (y - s): row i of the substitution for x_i.
    std::vector<std::vector<BigRat>> rows(t.matrix.rows);
    std::vector<BigRat> shift(t.matrix.rows, BigRat(0));
    for (std::size_t i = 0; i < t.matrix.rows; ++i) {
        rows[i].resize(t.matrix.cols);
        for (std::size_t j = 0; j < t.matrix.cols; ++j) {
            rows[i][j] = minv(i, j);
            shift[i] -= minv(i, j) * BigRat(t.shift[j]);
        }
    }
    QPoly g = compose_linear(to_rational(f), rows, &shift) * BigRat(t.scale);
    Poly out(f.nvars());
    for (const auto& [mon, c] : g.terms()) {
        if (denominator(c) != 1) throw DomainError("coordinate change does not yield integer coefficients at this scale");
        out.add_term(mon, numerator(c));
    }
    // Exact re-verification of the defining identity.
    Poly back = substitute_affine(out, t.matrix, t.shift);
    if (back != f * t.scale) throw InternalError("coordinate change identity failed to re-verify");
    return out;
}

} // namespace hypercount
