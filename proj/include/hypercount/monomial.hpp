#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "hypercount/errors.hpp"

namespace hypercount {

// Exponent vector of a power product. The length is the ambient variable
// count of the owning polynomial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0u) {
        if (nvars < 0) throw DomainError("negative variable count");
    }
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e_.size()); }

    std::uint32_t exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }

    void set_exponent(int i, std::uint32_t v) { e_[static_cast<std::size_t>(i)] = v; }

    const std::vector<std::uint32_t>& exponents() const { return e_; }

    int total_degree() const {
        long long s = 0;
        for (auto x : e_) s += x;
        return static_cast<int>(s);
    }

    bool is_constant() const {
        for (auto x : e_) {
            if (x != 0) return false;
        }
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    // Componentwise divisibility.
    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] > o.e_[i]) return false;
        }
        return true;
    }

    Monomial divide(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i]) throw DomainError("monomial division not exact");
            r.e_[i] -= o.e_[i];
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> e_;
};

// Graded lexicographic order: higher total degree first, ties broken
// lexicographically with x1 largest. This is the canonical term order for
// storage and printing.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

} // namespace hypercount
