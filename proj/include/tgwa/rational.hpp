#pragma once

// Exact rational scalars. Backed by GMP's mpq_class, which keeps values in
// lowest terms with a positive denominator once canonicalized.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tgwa {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Thrown for malformed user input (rational literals, expressions, files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position = 0)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses "a", "-a", "a/b" with decimal digits only. Never accepts floats.
inline Rational parseRational(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t from) {
        std::size_t end = from;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        return end;
    };
    std::size_t numEnd = digits(pos);
    if (numEnd == pos) throw ParseError("invalid rational literal '" + s + "'", pos);
    Integer num(s.substr(pos, numEnd - pos), 10);
    Integer den(1);
    if (numEnd < s.size()) {
        if (s[numEnd] != '/') throw ParseError("invalid rational literal '" + s + "'", numEnd);
        std::size_t denEnd = digits(numEnd + 1);
        if (denEnd == numEnd + 1 || denEnd != s.size())
            throw ParseError("invalid rational literal '" + s + "'", numEnd + 1);
        den = Integer(s.substr(numEnd + 1, denEnd - numEnd - 1), 10);
        if (den == 0) throw ParseError("zero denominator in '" + s + "'", numEnd + 1);
    }
    Rational r(num, den);
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

inline std::string toString(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// a/b in lowest terms. mpq_class(a, b) does not reduce, and GMP arithmetic
/// assumes reduced operands.
inline Rational ratio(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("zero denominator");
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline bool isInteger(const Rational& r) { return r.get_den() == 1; }

/// Floor of a rational as an integer.
inline Integer floorOf(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline long toLong(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

}  // namespace tgwa
