#pragma once

// Recursive descent parser for polynomial expressions.
//
//   expr   := sign? term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := rational | 'u' digits | '(' expr ')'
//
// A rational literal is "a" or "a/b". Whitespace is ignored between tokens,
// and there is no implicit multiplication: "u1 u2" is a syntax error.

#include "tgwa/poly.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace tgwa {

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t varCount) : text_(text), m_(varCount) {}

    Poly parse() {
        Poly p = expr();
        skipSpace();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    std::string_view text_;
    std::size_t m_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skipSpace();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly expr() {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        Poly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (accept('^')) {
            skipSpace();
            std::string d = digits();
            if (d.empty()) fail("expected a natural exponent after '^'");
            if (d.size() > 6) fail("exponent too large");
            b = b.pow(static_cast<unsigned>(std::stoul(d)));
        }
        return b;
    }

    Poly base() {
        skipSpace();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'u') {
            ++pos_;
            std::size_t at = pos_;
            std::string d = digits();
            if (d.empty()) fail("expected a variable index after 'u'");
            if (d.size() > 6) fail("variable index too large");
            unsigned long idx = std::stoul(d);
            if (idx == 0 || idx > m_) {
                pos_ = at;
                fail("variable u" + d + " out of range (ring has " + std::to_string(m_) + " variables)");
            }
            return Poly::variable(m_, idx - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            Integer n(num, 10);
            Integer den(1);
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string d = digits();
                if (d.empty()) fail("expected a denominator after '/'");
                den = Integer(d, 10);
                if (den == 0) fail("zero denominator");
            }
            Rational r(n, den);
            r.canonicalize();
            return Poly::constant(m_, r);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace detail

/// Parses an expression into a polynomial in u1..u_varCount.
inline Poly parsePoly(std::string_view text, std::size_t varCount) {
    return detail::PolyParser(text, varCount).parse();
}

}  // namespace tgwa
