#pragma once

// Sparse multivariate polynomials over Q in variables u1..um.
//
// Terms are kept in a map ordered by the lexicographic monomial order with
// u1 > u2 > ... > um, largest first, so the leading term is always begin().
// No stored coefficient is ever zero.

#include "tgwa/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgwa {

/// Exponent vector of length m.
using Monomial = std::vector<unsigned>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Poly {
public:
    using Terms = std::map<Monomial, Rational, std::greater<>>;

    Poly() = default;
    explicit Poly(std::size_t varCount) : varCount_(varCount) {}

    static Poly constant(std::size_t varCount, const Rational& c) {
        Poly p(varCount);
        if (c != 0) p.terms_.emplace(Monomial(varCount, 0), c);
        return p;
    }
    static Poly one(std::size_t varCount) { return constant(varCount, 1); }

    /// The variable u_{index+1} (index is 0-based).
    static Poly variable(std::size_t varCount, std::size_t index) {
        if (index >= varCount) throw DimensionError("variable index out of range");
        Monomial e(varCount, 0);
        e[index] = 1;
        return monomial(varCount, std::move(e), 1);
    }

    static Poly monomial(std::size_t varCount, Monomial exponents, const Rational& c) {
        if (exponents.size() != varCount) throw DimensionError("monomial length does not match variable count");
        Poly p(varCount);
        if (c != 0) p.terms_.emplace(std::move(exponents), c);
        return p;
    }

    std::size_t varCount() const { return varCount_; }
    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    bool isConstant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                  [](unsigned e) { return e == 0; }));
    }

    bool isOne() const { return isConstant() && !isZero() && terms_.begin()->second == 1; }

    Rational constantTerm() const { return coefficient(Monomial(varCount_, 0)); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int totalDegree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, monomialDegree(m));
        return d;
    }

    /// Degree in a single variable; -1 for zero.
    int degreeIn(std::size_t var) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
        return d;
    }

    /// Homogeneous component of the given total degree.
    Poly homogeneousPart(int degree) const {
        Poly out(varCount_);
        for (const auto& [m, c] : terms_)
            if (monomialDegree(m) == degree) out.terms_.emplace(m, c);
        return out;
    }

    /// Indices of variables that actually occur.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> vars;
        for (std::size_t k = 0; k < varCount_; ++k) {
            for (const auto& [m, c] : terms_) {
                if (m[k] != 0) {
                    vars.push_back(k);
                    break;
                }
            }
        }
        return vars;
    }

    /// Adds c * x^m in place, dropping the term if it cancels.
    void addTerm(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        checkSameRing(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        checkSameRing(o);
        for (const auto& [m, c] : o.terms_) addTerm(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.checkSameRing(b);
        Poly out(a.varCount_);
        Monomial e(a.varCount_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ma[k] + mb[k];
                out.addTerm(e, ca * cb);
            }
        }
        return out;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned exponent) const {
        Poly result = one(varCount_);
        Poly base = *this;
        while (exponent > 0) {
            if (exponent & 1u) result *= base;
            exponent >>= 1u;
            if (exponent > 0) base *= base;
        }
        return result;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.varCount_ == b.varCount_ && a.terms_ == b.terms_;
    }

    static int monomialDegree(const Monomial& m) {
        int d = 0;
        for (unsigned e : m) d += static_cast<int>(e);
        return d;
    }

    void checkSameRing(const Poly& o) const {
        if (varCount_ != o.varCount_)
            throw DimensionError("variable-count mismatch: " + std::to_string(varCount_) + " vs " +
                                 std::to_string(o.varCount_));
    }

private:
    std::size_t varCount_ = 0;
    Terms terms_;
};

class ZeroPolynomialError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline const Monomial& leadingMonomial(const Poly& p) {
    if (p.isZero()) throw ZeroPolynomialError("leading monomial of the zero polynomial");
    return p.terms().begin()->first;
}

inline const Rational& leadingCoefficient(const Poly& p) {
    if (p.isZero()) throw ZeroPolynomialError("leading coefficient of the zero polynomial");
    return p.terms().begin()->second;
}

inline bool isMonic(const Poly& p) { return !p.isZero() && leadingCoefficient(p) == 1; }

struct MonicSplit {
    Rational scale;
    Poly monic;
};

/// Returns (c, p/c) with c the lex leading coefficient of p.
inline MonicSplit makeMonic(const Poly& p) {
    Rational c = leadingCoefficient(p);
    Poly q = p;
    q *= Rational(1) / c;
    return {c, std::move(q)};
}

/// Leading form: the top-degree homogeneous component.
inline Poly leadingForm(const Poly& p) { return p.homogeneousPart(p.totalDegree()); }

inline bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] > m[k]) return false;
    return true;
}

/// Exact quotient a / b, or nullopt when b does not divide a.
///
/// Single-divisor long division under lex order: if the leading term of the
/// running remainder is not divisible by lt(b) the remainder can never vanish.
inline std::optional<Poly> exactDiv(const Poly& a, const Poly& b) {
    a.checkSameRing(b);
    if (b.isZero()) throw ZeroPolynomialError("division by the zero polynomial");
    const Monomial& lb = leadingMonomial(b);
    const Rational& cb = leadingCoefficient(b);
    Poly rem = a;
    Poly quot(a.varCount());
    Monomial q(a.varCount());
    while (!rem.isZero()) {
        const Monomial& lr = leadingMonomial(rem);
        if (!divides(lb, lr)) return std::nullopt;
        for (std::size_t k = 0; k < q.size(); ++k) q[k] = lr[k] - lb[k];
        Rational c = leadingCoefficient(rem) / cb;
        Poly step = Poly::monomial(a.varCount(), q, c);
        quot += step;
        rem -= step * b;
    }
    return quot;
}

/// Formal partial derivative with respect to u_{var+1}.
inline Poly derivative(const Poly& p, std::size_t var) {
    if (var >= p.varCount()) throw DimensionError("derivative variable out of range");
    Poly out(p.varCount());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) continue;
        Monomial e = m;
        --e[var];
        out.addTerm(e, c * m[var]);
    }
    return out;
}

inline std::vector<Poly> gradient(const Poly& p) {
    std::vector<Poly> g;
    g.reserve(p.varCount());
    for (std::size_t k = 0; k < p.varCount(); ++k) g.push_back(derivative(p, k));
    return g;
}

/// <grad p, beta> = sum_k beta_k dp/du_k.
inline Poly directionalDerivative(const Poly& p, std::span<const Rational> beta) {
    if (beta.size() != p.varCount()) throw DimensionError("direction length does not match variable count");
    Poly out(p.varCount());
    for (std::size_t k = 0; k < beta.size(); ++k) {
        if (beta[k] == 0) continue;
        out += derivative(p, k) * beta[k];
    }
    return out;
}

/// Substitutes u_j -> images[j] for every j. Images live in a ring of
/// images[0].varCount() variables (which may differ from p's).
inline Poly substitute(const Poly& p, std::span<const Poly> images) {
    if (images.size() != p.varCount()) throw DimensionError("substitution needs one image per variable");
    std::size_t target = images.empty() ? 0 : images.front().varCount();
    for (const auto& img : images) {
        if (img.varCount() != target) throw DimensionError("substitution images live in different rings");
    }
    std::vector<std::vector<Poly>> powers(images.size());
    for (std::size_t k = 0; k < images.size(); ++k) {
        unsigned maxExp = 0;
        for (const auto& [m, c] : p.terms()) maxExp = std::max(maxExp, m[k]);
        powers[k].reserve(maxExp + 1);
        powers[k].push_back(Poly::one(target));
        for (unsigned e = 1; e <= maxExp; ++e) powers[k].push_back(powers[k].back() * images[k]);
    }
    Poly out(target);
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(target, c);
        for (std::size_t k = 0; k < m.size(); ++k)
            if (m[k] != 0) term *= powers[k][m[k]];
        out += term;
    }
    return out;
}

/// p(u1 - t1, ..., um - tm), exact.
inline Poly shift(const Poly& p, std::span<const Rational> t) {
    if (t.size() != p.varCount()) throw DimensionError("shift vector length does not match variable count");
    if (std::all_of(t.begin(), t.end(), [](const Rational& x) { return x == 0; })) return p;
    std::vector<Poly> images;
    images.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        images.push_back(Poly::variable(p.varCount(), k) - Poly::constant(p.varCount(), t[k]));
    return substitute(p, images);
}

inline Rational evaluate(const Poly& p, std::span<const Rational> point) {
    if (point.size() != p.varCount()) throw DimensionError("evaluation point length does not match variable count");
    Rational sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational term = c;
        for (std::size_t k = 0; k < m.size(); ++k) {
            for (unsigned e = 0; e < m[k]; ++e) term *= point[k];
        }
        sum += term;
    }
    return sum;
}

/// Canonical text form, e.g. "u1^2*u2 - 1/4*u1 + 3". Terms are printed in
/// descending lex order; the zero polynomial prints as "0".
inline std::string toString(const Poly& p) {
    if (p.isZero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "u" + std::to_string(k + 1);
            if (m[k] > 1) mono += "^" + std::to_string(m[k]);
        }
        if (mono.empty()) {
            out += toString(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += toString(mag) + "*" + mono;
        }
    }
    return out;
}

}  // namespace tgwa
