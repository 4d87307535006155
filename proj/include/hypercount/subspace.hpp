#pragma once

#include <vector>

#include "hypercount/linalg.hpp"

namespace hypercount {

// Solution space of a homogeneous linear system in n+1 coordinates, viewed
// as a projective linear subspace of P^n. The basis is kept in a canonical
// primitive-integer form derived from the RREF kernel, so equal subspaces
// compare equal structurally.
class ProjectiveSubspace {
public:
    ProjectiveSubspace() = default;

    // From constraint rows: the subspace {X : row . X = 0 for all rows}.
    static ProjectiveSubspace from_constraints(int ambient_dim, const std::vector<std::vector<BigRat>>& rows) {
        ProjectiveSubspace s;
        s.ambient_dim_ = ambient_dim;
        std::size_t ncols = static_cast<std::size_t>(ambient_dim) + 1;
        QMat m(rows.size(), ncols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != ncols) throw DomainError("constraint row has wrong length");
            for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
        }
        for (auto& v : kernel_basis(std::move(m))) s.basis_.push_back(primitive_integer_vector(v));
        return s;
    }

    static ProjectiveSubspace whole_space(int ambient_dim) {
        return from_constraints(ambient_dim, {});
    }

    static ProjectiveSubspace empty_space(int ambient_dim) {
        ProjectiveSubspace s;
        s.ambient_dim_ = ambient_dim;
        return s;
    }

    // Span of the given vectors, canonicalized through row reduction.
    static ProjectiveSubspace from_span(int ambient_dim, const std::vector<std::vector<BigRat>>& vectors) {
        ProjectiveSubspace s;
        s.ambient_dim_ = ambient_dim;
        if (vectors.empty()) return s;
        std::size_t ncols = static_cast<std::size_t>(ambient_dim) + 1;
        QMat m(vectors.size(), ncols);
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != ncols) throw DomainError("span vector has wrong length");
            for (std::size_t j = 0; j < ncols; ++j) m(i, j) = vectors[i][j];
        }
        rref(m);
        for (std::size_t i = 0; i < m.rows; ++i) {
            std::vector<BigRat> row(ncols);
            bool nonzero = false;
            for (std::size_t j = 0; j < ncols; ++j) {
                row[j] = m(i, j);
                nonzero = nonzero || row[j] != 0;
            }
            if (nonzero) s.basis_.push_back(primitive_integer_vector(row));
        }
        return s;
    }

    int ambient_dim() const { return ambient_dim_; }

    // Projective dimension; -1 encodes the empty subspace.
    int dim() const { return static_cast<int>(basis_.size()) - 1; }

    bool empty() const { return basis_.empty(); }

    const std::vector<std::vector<BigInt>>& basis() const { return basis_; }

    std::vector<std::vector<BigRat>> rational_basis() const {
        std::vector<std::vector<BigRat>> out;
        for (const auto& v : basis_) {
            std::vector<BigRat> w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) w[i] = BigRat(v[i]);
            out.push_back(std::move(w));
        }
        return out;
    }

    bool contains_point(const std::vector<BigRat>& p) const { return in_span(rational_basis(), p); }

    bool contains(const ProjectiveSubspace& other) const {
        auto mine = rational_basis();
        for (const auto& v : other.rational_basis())
            if (!in_span(mine, v)) return false;
        return true;
    }

    bool same_subspace(const ProjectiveSubspace& other) const {
        return ambient_dim_ == other.ambient_dim_ && basis_.size() == other.basis_.size() && contains(other);
    }

    // Intersection with the hyperplane {X : normal . X = 0}.
    ProjectiveSubspace intersect_hyperplane(const std::vector<BigRat>& normal) const {
        if (basis_.empty()) return *this;
        // Solve for coefficient combinations of the basis lying on the
        // hyperplane, then map back to ambient coordinates.
        QMat m(1, basis_.size());
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            BigRat s = 0;
            for (std::size_t k = 0; k < normal.size(); ++k) s += normal[k] * BigRat(basis_[j][k]);
            m(0, j) = s;
        }
        ProjectiveSubspace out;
        out.ambient_dim_ = ambient_dim_;
        for (const auto& combo : kernel_basis(std::move(m))) {
            std::vector<BigRat> v(static_cast<std::size_t>(ambient_dim_) + 1, BigRat(0));
            for (std::size_t j = 0; j < basis_.size(); ++j)
                for (std::size_t k = 0; k < v.size(); ++k) v[k] += combo[j] * BigRat(basis_[j][k]);
            out.basis_.push_back(primitive_integer_vector(v));
        }
        return out;
    }

private:
    int ambient_dim_ = 0;
    std::vector<std::vector<BigInt>> basis_;
};

} // namespace hypercount
