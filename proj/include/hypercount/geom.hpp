#pragma once

#include <vector>

#include "hypercount/linear_map.hpp"
#include "hypercount/poly.hpp"
#include "hypercount/subspace.hpp"

namespace hypercount {

// Basis of the rational directions v with directional derivative
// sum_i v_i df/dx_i identically zero: the translation-invariant directions.
inline std::vector<std::vector<BigInt>> translation_kernel(const Poly& f) {
    if (f.is_zero()) throw DomainError("translation kernel of the zero polynomial");
    int n = f.nvars();
    std::vector<Poly> partials;
    partials.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) partials.push_back(f.partial(i));
    // Collect the union of monomials; one linear condition per monomial.
    std::map<Monomial, std::size_t, GrlexDescending> row_of;
    for (const auto& p : partials)
        for (const auto& [m, c] : p.terms()) row_of.emplace(m, 0);
    std::size_t idx = 0;
    for (auto& [m, r] : row_of) r = idx++;
    QMat a(row_of.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& [m, c] : partials[static_cast<std::size_t>(i)].terms())
            a(row_of[m], static_cast<std::size_t>(i)) = BigRat(c);
    std::vector<std::vector<BigInt>> out;
    for (auto& v : kernel_basis(std::move(a))) out.push_back(primitive_integer_vector(v));
    return out;
}

// f lies in Q[L1, L2] for two linear forms iff its translation kernel has
// dimension at least n-2.
inline bool is_poly_in_two_linear_forms(const Poly& f) {
    if (f.is_zero()) throw DomainError("two-linear-forms test on the zero polynomial");
    return static_cast<int>(translation_kernel(f).size()) >= f.nvars() - 2;
}

// The locus of points of full multiplicity d on the hypersurface defined by
// a nonzero homogeneous F of degree d: the common zero set of all
// order-(d-1) partial derivatives, each of which is a linear form. Lives in
// P^(nvars-1).
inline ProjectiveSubspace multiplicity_d_locus(const Poly& form) {
    if (form.is_zero()) throw DomainError("multiplicity locus of the zero polynomial");
    if (!form.is_homogeneous()) throw DomainError("multiplicity locus expects a homogeneous form");
    int d = form.degree_or_throw();
    int ambient = form.nvars() - 1;
    std::vector<std::vector<BigRat>> rows;
    for (const auto& p : iterated_partials(form, d - 1)) {
        if (p.is_zero()) continue;
        std::vector<BigRat> row(static_cast<std::size_t>(form.nvars()), BigRat(0));
        for (const auto& [m, c] : p.terms()) {
            // order-(d-1) partials of a degree-d form are linear forms
            for (int i = 0; i < form.nvars(); ++i)
                if (m.exponent(i) == 1) row[static_cast<std::size_t>(i)] = BigRat(c);
        }
        rows.push_back(std::move(row));
    }
    return ProjectiveSubspace::from_constraints(ambient, rows);
}

// Projective dimension of (multiplicity-d locus of the homogenization) cut
// by the hyperplane at infinity X0 = 0; -1 when empty. The two-linear-forms
// condition is equivalent to this being at least n-3.
inline int lambda_h0_dim(const Poly& f) {
    if (f.is_zero()) throw DomainError("lambda_h0_dim of the zero polynomial");
    int d = f.degree_or_throw();
    if (d < 1) throw DomainError("lambda_h0_dim expects a nonconstant polynomial");
    Poly form = f.homogenize(d);
    ProjectiveSubspace lambda = multiplicity_d_locus(form);
    std::vector<BigRat> x0(static_cast<std::size_t>(form.nvars()), BigRat(0));
    x0[0] = 1;
    return lambda.intersect_hyperplane(x0).dim();
}

// Integer basis of the hyperplane {X : normal . X = 0}, as columns of a
// (n+1) x n matrix suitable for substitution.
inline IMat hyperplane_parametrization(const std::vector<BigInt>& normal) {
    std::size_t n1 = normal.size();
    QMat m(1, n1);
    for (std::size_t j = 0; j < n1; ++j) m(0, j) = BigRat(normal[j]);
    auto ker = kernel_basis(std::move(m));
    if (ker.empty()) throw DomainError("hyperplane normal must be nonzero");
    IMat p(n1, ker.size());
    for (std::size_t j = 0; j < ker.size(); ++j) {
        auto v = primitive_integer_vector(ker[j]);
        for (std::size_t i = 0; i < n1; ++i) p(i, j) = v[i];
    }
    return p;
}

// Restriction of a form to a hyperplane: F(P y) in one fewer coordinate.
inline Poly restrict_to_hyperplane(const Poly& form, const std::vector<BigInt>& normal) {
    return substitute_matrix(form, hyperplane_parametrization(normal));
}

// Pushes a subspace expressed in hyperplane coordinates (columns of P) back
// into the ambient space: the span of P * b over the basis vectors b.
inline ProjectiveSubspace push_forward(const ProjectiveSubspace& s, const IMat& p) {
    std::vector<std::vector<BigRat>> image;
    for (const auto& b : s.basis()) {
        std::vector<BigInt> bi(b.begin(), b.end());
        auto v = p.mul_vec(bi);
        std::vector<BigRat> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = BigRat(v[i]);
        image.push_back(std::move(w));
    }
    return ProjectiveSubspace::from_span(static_cast<int>(p.rows) - 1, image);
}

} // namespace hypercount
