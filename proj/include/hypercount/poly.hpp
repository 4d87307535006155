#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hypercount/bigint.hpp"
#include "hypercount/monomial.hpp"

namespace hypercount {

// Sparse multivariate polynomial with exact coefficients, canonical by
// construction: no zero coefficients are stored and terms sit in a map
// ordered by descending graded-lex, so equal polynomials have identical
// term maps. Instances are immutable values after construction; every
// operation returns a fresh polynomial.
template <class C>
class PolyT {
public:
    using Coeff = C;
    using TermMap = std::map<Monomial, C, GrlexDescending>;

    PolyT() : nvars_(0) {}

    explicit PolyT(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw DomainError("negative variable count");
    }

    static PolyT zero(int nvars) { return PolyT(nvars); }

    static PolyT constant(int nvars, const C& c) {
        PolyT p(nvars);
        if (!(c == C(0))) p.terms_.emplace(Monomial(nvars), c);
        return p;
    }

    // The monomial c * x_index^exp (index is 1-based).
    static PolyT monomial(int nvars, int index, std::uint32_t exp, const C& c) {
        check_index(nvars, index);
        PolyT p(nvars);
        if (!(c == C(0))) {
            Monomial m(nvars);
            m.set_exponent(index - 1, exp);
            p.terms_.emplace(std::move(m), c);
        }
        return p;
    }

    static PolyT variable(int nvars, int index) { return monomial(nvars, index, 1, C(1)); }

    static PolyT from_terms(int nvars, std::vector<std::pair<Monomial, C>> terms) {
        PolyT p(nvars);
        for (auto& [m, c] : terms) {
            if (m.nvars() != nvars) throw DomainError("monomial arity mismatch");
            p.add_term(m, c);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; the zero polynomial has no degree (spec: a sentinel,
    // never -1-as-integer).
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.total_degree();
    }

    int degree_or_throw() const {
        auto d = degree();
        if (!d) throw DomainError("degree of the zero polynomial");
        return *d;
    }

    // Degree in a single variable (1-based); zero polynomial yields nullopt.
    std::optional<int> degree_in(int index) const {
        check_index(nvars_, index);
        if (terms_.empty()) return std::nullopt;
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(index - 1));
        return static_cast<int>(d);
    }

    bool depends_on(int index) const {
        check_index(nvars_, index);
        for (const auto& [m, c] : terms_) {
            if (m.exponent(index - 1) != 0) return true;
        }
        return false;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const { return coefficient(Monomial(nvars_)); }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw DomainError("leading monomial of the zero polynomial");
        return terms_.begin()->first;
    }

    const C& leading_coefficient() const {
        if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return terms_.begin()->second;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.total_degree();
        for (const auto& [m, c] : terms_) {
            if (m.total_degree() != d) return false;
        }
        return true;
    }

    bool operator==(const PolyT& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const PolyT& o) const { return !(*this == o); }

    PolyT operator-() const {
        PolyT r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    PolyT operator+(const PolyT& o) const {
        check_same_ring(o);
        PolyT r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    PolyT operator-(const PolyT& o) const {
        check_same_ring(o);
        PolyT r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    PolyT operator*(const PolyT& o) const {
        check_same_ring(o);
        PolyT r(nvars_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        }
        return r;
    }

    PolyT operator*(const C& c) const {
        PolyT r(nvars_);
        if (c == C(0)) return r;
        for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
        return r;
    }

    PolyT pow(std::uint32_t e) const {
        PolyT r = constant(nvars_, C(1));
        PolyT base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    // Exact evaluation at a point; arbitrary precision, no overflow.
    template <class V>
    V eval(const std::vector<V>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw DomainError("evaluation point has wrong dimension");
        // Per-variable power tables sized by the max exponent present.
        std::vector<std::vector<V>> pows(static_cast<std::size_t>(nvars_));
        for (int i = 0; i < nvars_; ++i) {
            std::uint32_t maxe = 0;
            for (const auto& [m, c] : terms_) maxe = std::max(maxe, m.exponent(i));
            auto& tab = pows[static_cast<std::size_t>(i)];
            tab.resize(maxe + 1);
            tab[0] = V(1);
            for (std::uint32_t k = 1; k <= maxe; ++k) tab[k] = tab[k - 1] * point[static_cast<std::size_t>(i)];
        }
        V acc(0);
        for (const auto& [m, c] : terms_) {
            V t(c);
            for (int i = 0; i < nvars_; ++i) {
                std::uint32_t e = m.exponent(i);
                if (e) t *= pows[static_cast<std::size_t>(i)][e];
            }
            acc += t;
        }
        return acc;
    }

    // Fixes x_index := value and drops that variable; the result lives in
    // nvars-1 variables with indices above `index` shifted down.
    PolyT substitute_var(int index, const C& value) const {
        check_index(nvars_, index);
        PolyT r(nvars_ - 1);
        std::vector<C> pows{C(1)};
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exponent(index - 1);
            while (pows.size() <= e) pows.push_back(pows.back() * value);
            Monomial sq(nvars_ - 1);
            int j = 0;
            for (int i = 0; i < nvars_; ++i) {
                if (i == index - 1) continue;
                sq.set_exponent(j++, m.exponent(i));
            }
            r.add_term(sq, c * pows[e]);
        }
        return r;
    }

    // Formal partial derivative with respect to x_index.
    PolyT partial(int index) const {
        check_index(nvars_, index);
        PolyT r(nvars_);
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exponent(index - 1);
            if (e == 0) continue;
            Monomial dm = m;
            dm.set_exponent(index - 1, e - 1);
            r.add_term(dm, c * C(e));
        }
        return r;
    }

    // Homogeneous part of top degree.
    PolyT leading_form() const {
        if (terms_.empty()) throw DomainError("leading form of the zero polynomial");
        int d = degree_or_throw();
        PolyT r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m.total_degree() == d) r.terms_.emplace(m, c);
        }
        return r;
    }

    // Homogeneous part of a given degree.
    PolyT homogeneous_part(int d) const {
        PolyT r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m.total_degree() == d) r.terms_.emplace(m, c);
        }
        return r;
    }

    // F(X0,...,Xn) = X0^d f(X1/X0,...,Xn/X0); new first variable X0,
    // existing variables shift up by one. Requires d >= deg f and f != 0.
    PolyT homogenize(int d) const {
        if (terms_.empty()) throw DomainError("homogenization of the zero polynomial");
        if (d < degree_or_throw()) throw DomainError("homogenization degree below the degree of the polynomial");
        PolyT r(nvars_ + 1);
        for (const auto& [m, c] : terms_) {
            Monomial hm(nvars_ + 1);
            hm.set_exponent(0, static_cast<std::uint32_t>(d - m.total_degree()));
            for (int i = 0; i < nvars_; ++i) hm.set_exponent(i + 1, m.exponent(i));
            r.terms_.emplace(std::move(hm), c);
        }
        return r;
    }

    // Substitutes X0 = 1 in a polynomial whose first variable plays the
    // role of the homogenizing variable; inverse of homogenize.
    PolyT dehomogenize_first() const { return substitute_var(1, C(1)); }

    // Renames variables so the polynomial lives in a wider ring:
    // variable i maps to variable mapping[i-1] (1-based) among new_nvars.
    PolyT embed(int new_nvars, const std::vector<int>& mapping) const {
        if (static_cast<int>(mapping.size()) != nvars_) throw DomainError("embed mapping arity mismatch");
        PolyT r(new_nvars);
        for (const auto& [m, c] : terms_) {
            Monomial nm(new_nvars);
            for (int i = 0; i < nvars_; ++i) {
                check_index(new_nvars, mapping[static_cast<std::size_t>(i)]);
                nm.set_exponent(mapping[static_cast<std::size_t>(i)] - 1, m.exponent(i));
            }
            r.add_term(nm, c);
        }
        return r;
    }

    template <class D, class F>
    PolyT<D> map_coefficients(F&& f) const {
        PolyT<D> r(nvars_);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    // Graded-lex printing with explicit '*' and '^'; parse(print(p)) == p.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            C a = c;
            if (first) {
                if (coeff_negative(a)) {
                    os << "-";
                    a = -a;
                }
                first = false;
            } else {
                if (coeff_negative(a)) {
                    os << " - ";
                    a = -a;
                } else {
                    os << " + ";
                }
            }
            bool printed_coeff = false;
            if (m.is_constant() || !(a == C(1))) {
                os << coeff_str(a);
                printed_coeff = true;
            }
            bool first_var = true;
            for (int i = 0; i < nvars_; ++i) {
                std::uint32_t e = m.exponent(i);
                if (e == 0) continue;
                if (printed_coeff || !first_var) os << "*";
                os << "x" << (i + 1);
                if (e > 1) os << "^" << e;
                first_var = false;
            }
        }
        return os.str();
    }

    // Internal: accumulate a term, keeping canonical form.
    void add_term(const Monomial& m, const C& c) {
        if (c == C(0)) return;
        if (m.nvars() != nvars_) throw DomainError("monomial arity mismatch");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

private:
    static void check_index(int nvars, int index) {
        if (index < 1 || index > nvars) throw DomainError("variable index out of range");
    }

    void check_same_ring(const PolyT& o) const {
        if (nvars_ != o.nvars_) throw DomainError("polynomials live in different rings");
    }

    static bool coeff_negative(const BigInt& c) { return c < 0; }
    static bool coeff_negative(const BigRat& c) { return c < 0; }

    static std::string coeff_str(const C& c) { return to_string(c); }

    int nvars_;
    TermMap terms_;
};

using Poly = PolyT<BigInt>;
using QPoly = PolyT<BigRat>;

inline QPoly to_rational(const Poly& p) {
    return p.template map_coefficients<BigRat>([](const BigInt& c) { return BigRat(c); });
}

// Clears denominators and divides by the integer content: the unique
// primitive integer polynomial with positive leading coefficient spanning
// the same rational line. Zero maps to zero.
inline Poly primitive_integer_poly(const QPoly& p) {
    if (p.is_zero()) return Poly(p.nvars());
    BigInt den = 1;
    for (const auto& [m, c] : p.terms()) den = lcm(den, denominator(c));
    Poly r(p.nvars());
    BigInt cont = 0;
    for (const auto& [m, c] : p.terms()) {
        BigInt v = numerator(c) * (den / denominator(c));
        cont = gcd(cont, v);
        r.add_term(m, v);
    }
    if (sign(r.leading_coefficient()) < 0) cont = -cont;
    Poly out(p.nvars());
    for (const auto& [m, c] : r.terms()) out.add_term(m, c / cont);
    return out;
}

inline BigInt integer_content(const Poly& p) {
    BigInt g = 0;
    for (const auto& [m, c] : p.terms()) g = gcd(g, c);
    return g;
}

inline Poly divide_by_content(const Poly& p, BigInt& content_out) {
    content_out = integer_content(p);
    if (content_out == 0) return p;
    if (sign(p.leading_coefficient()) < 0) content_out = -content_out;
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c / content_out);
    return r;
}

// Max coefficient modulus (the height of the polynomial).
inline BigInt height(const Poly& p) {
    BigInt h = 0;
    for (const auto& [m, c] : p.terms()) h = std::max(h, abs(c));
    return h;
}

// All distinct formal partial derivatives of order k, one per multi-index,
// in lexicographic multi-index order. Order 0 yields {f}.
template <class C>
std::vector<PolyT<C>> iterated_partials(const PolyT<C>& f, int k) {
    if (k < 0) throw DomainError("negative differentiation order");
    std::vector<PolyT<C>> current{f};
    std::vector<std::vector<int>> indices{{}};
    for (int step = 0; step < k; ++step) {
        std::vector<PolyT<C>> next;
        std::vector<std::vector<int>> next_idx;
        for (std::size_t t = 0; t < current.size(); ++t) {
            int start = indices[t].empty() ? 1 : indices[t].back();
            for (int i = start; i <= f.nvars(); ++i) {
                next.push_back(current[t].partial(i));
                auto idx = indices[t];
                idx.push_back(i);
                next_idx.push_back(std::move(idx));
            }
        }
        current = std::move(next);
        indices = std::move(next_idx);
    }
    return current;
}

// Composition f(M y (+ shift)) where row i of M expresses old variable i in
// the new variables; cols(M) is the arity of the result.
template <class C>
PolyT<C> compose_linear(const PolyT<C>& f, const std::vector<std::vector<C>>& rows,
                        const std::vector<C>* shift = nullptr) {
    if (static_cast<int>(rows.size()) != f.nvars()) throw DomainError("substitution has wrong number of rows");
    int out_vars = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != out_vars) throw DomainError("ragged substitution matrix");
    }
    std::vector<PolyT<C>> forms;
    forms.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        PolyT<C> L(out_vars);
        for (int j = 0; j < out_vars; ++j) {
            Monomial m(out_vars);
            m.set_exponent(j, 1);
            L.add_term(m, rows[i][static_cast<std::size_t>(j)]);
        }
        if (shift) L.add_term(Monomial(out_vars), (*shift)[i]);
        forms.push_back(std::move(L));
    }
    // Power cache per variable.
    std::vector<std::vector<PolyT<C>>> pows(forms.size());
    for (std::size_t i = 0; i < forms.size(); ++i) pows[i].push_back(PolyT<C>::constant(out_vars, C(1)));
    PolyT<C> acc(out_vars);
    for (const auto& [m, c] : f.terms()) {
        PolyT<C> t = PolyT<C>::constant(out_vars, c);
        for (int i = 0; i < f.nvars(); ++i) {
            std::uint32_t e = m.exponent(i);
            if (e == 0) continue;
            auto& tab = pows[static_cast<std::size_t>(i)];
            while (tab.size() <= e) tab.push_back(tab.back() * forms[static_cast<std::size_t>(i)]);
            t = t * tab[e];
        }
        acc = acc + t;
    }
    return acc;
}

} // namespace hypercount
