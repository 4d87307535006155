#pragma once

#include <cctype>
#include <string>

#include "hypercount/poly.hpp"

namespace hypercount {

// Recursive-descent parser for the polynomial grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := uint | var | '(' expr ')'
//   var    := 'x' uint          (1-based)
// Whitespace is insignificant. Variable indices must not exceed nvars.
class PolyParser {
public:
    PolyParser(std::string text, int nvars) : text_(std::move(text)), nvars_(nvars) {
        if (nvars_ < 1) throw DomainError("nvars must be positive");
    }

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Poly expr() {
        skip_ws();
        int sgn = 1;
        if (peek() == '+' || peek() == '-') {
            if (take() == '-') sgn = -1;
        }
        Poly acc = term();
        if (sgn < 0) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                Poly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                take();
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly b = base();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            std::size_t at = pos_;
            std::uint64_t e = uint_lit();
            if (e > kMaxExponent) throw ParseError("exponent too large", at);
            return b.pow(static_cast<std::uint32_t>(e));
        }
        return b;
    }

    Poly base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            std::size_t open = pos_;
            take();
            Poly p = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("unbalanced parenthesis", open);
            take();
            return p;
        }
        if (c == 'x') {
            std::size_t at = pos_;
            take();
            std::uint64_t idx = uint_lit();
            if (idx < 1 || idx > static_cast<std::uint64_t>(nvars_))
                throw ParseError("variable index out of range", at);
            return Poly::variable(nvars_, static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Poly::constant(nvars_, BigInt(text_.substr(start, pos_ - start)));
        }
        throw ParseError("expected integer, variable, or '('", pos_);
    }

    std::uint64_t uint_lit() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected an unsigned integer", pos_);
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > kMaxExponent * 1000) throw ParseError("integer literal too large here", pos_);
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    static constexpr std::uint64_t kMaxExponent = 64;

    std::string text_;
    int nvars_;
    std::size_t pos_ = 0;
};

inline Poly parse_poly(const std::string& text, int nvars) { return PolyParser(text, nvars).parse(); }

} // namespace hypercount
