#pragma once

// Convenience factorization for the polynomial shapes that show up in
// practice: products of linear shifts (u_j - c) and univariate polynomials of
// degree <= 4. Anything left over is kept as one factor, which the caller
// then asserts to be irreducible. This is not a general factorizer.

#include "tgwa/orbital.hpp"

#include <optional>
#include <vector>

namespace tgwa {

namespace detail {

constexpr long kDivisorLimit = 10'000'000'000L;

/// Positive divisors, or nullopt when |x| is too large to enumerate.
inline std::optional<std::vector<Integer>> positiveDivisors(Integer x) {
    x = abs(x);
    if (x == 0 || x > Integer(kDivisorLimit)) return std::nullopt;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= x; ++d) {
        if (x % d == 0) {
            small.push_back(d);
            if (d * d != x) large.push_back(x / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Integer coefficients (index = power) of a univariate polynomial in `var`,
/// scaled to be primitive.
inline std::vector<Integer> integerCoefficients(const Poly& p, std::size_t var) {
    int deg = p.degreeIn(var);
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1), 0);
    for (const auto& [m, coef] : p.terms()) c[m[var]] += coef;
    Integer l = 1;
    for (const auto& x : c) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& x : c) {
        out.push_back(Rational(x * l).get_num());
        g = gcd(g, out.back());
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

inline std::vector<Rational> rationalRoots(const std::vector<Integer>& coeffs) {
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (low + 1 >= coeffs.size()) return roots;
    auto tails = positiveDivisors(coeffs[low]);
    auto leads = positiveDivisors(coeffs.back());
    if (!tails || !leads) return roots;
    for (const auto& a : *tails) {
        for (const auto& b : *leads) {
            for (int sign : {1, -1}) {
                Rational r(a * sign, b);
                r.canonicalize();
                Rational acc = 0;
                for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * r + coeffs[k];
                if (acc == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
        }
    }
    return roots;
}

/// Kronecker's method restricted to quadratic factors of a primitive integer quartic.
inline std::optional<Poly> quadraticFactor(const Poly& p, std::size_t var) {
    auto c = integerCoefficients(p, var);
    if (c.size() != 5) return std::nullopt;
    auto at = [&](long x) {
        Integer acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
    };
    auto d0 = positiveDivisors(at(0));
    auto d1 = positiveDivisors(at(1));
    auto dm = positiveDivisors(at(-1));
    if (!d0 || !d1 || !dm) return std::nullopt;
    if (d0->size() * d1->size() * dm->size() > 200000) return std::nullopt;
    Poly x = Poly::variable(p.varCount(), var);
    for (const auto& a0 : *d0) {
        for (int s0 : {1, -1}) {
            Integer cc = a0 * s0;
            for (const auto& a1 : *d1) {
                for (int s1 : {1, -1}) {
                    for (const auto& am : *dm) {
                        for (int sm : {1, -1}) {
                            Integer v1 = a1 * s1, vm = am * sm;
                            Integer sum = v1 + vm - 2 * cc;
                            Integer diff = v1 - vm;
                            if (sum % 2 != 0 || diff % 2 != 0) continue;
                            Integer qa = sum / 2, qb = diff / 2;
                            if (qa <= 0 || c.back() % qa != 0) continue;
                            Poly g = x * x * Rational(qa) + x * Rational(qb) + Poly::constant(p.varCount(), cc);
                            if (exactDiv(p, g)) return makeMonic(g).monic;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

/// Univariate polynomial in `var` obtained by fixing every other variable.
inline Poly specializeOthers(const Poly& p, std::size_t var, long salt) {
    std::vector<Poly> images;
    static const long primes[] = {3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    for (std::size_t k = 0; k < p.varCount(); ++k) {
        if (k == var) {
            images.push_back(Poly::variable(p.varCount(), k));
        } else {
            images.push_back(Poly::constant(p.varCount(), ratio(primes[(k + static_cast<std::size_t>(salt)) % 12] + salt, 2)));
        }
    }
    return substitute(p, images);
}

}  // namespace detail

/// Best-effort factorization into monic factors, see the header comment.
inline FactoredPoly factorPoly(const Poly& p) {
    if (p.isZero()) throw ZeroPolynomialError("cannot factor the zero polynomial");
    FactoredPoly out;
    auto [scale, rest] = makeMonic(p);
    out.unit = scale;
    const std::size_t m = p.varCount();
    bool progress = true;
    while (progress && !rest.isConstant()) {
        progress = false;
        for (std::size_t v = 0; v < m && !rest.isConstant(); ++v) {
            if (rest.degreeIn(v) <= 0) continue;
            Poly uni(m);
            for (long salt = 0; salt < 3; ++salt) {
                uni = detail::specializeOthers(rest, v, salt);
                if (!uni.isZero()) break;
            }
            if (uni.isZero() || uni.isConstant()) continue;
            for (const auto& root : detail::rationalRoots(detail::integerCoefficients(uni, v))) {
                Poly lin = Poly::variable(m, v) - Poly::constant(m, root);
                while (auto q = exactDiv(rest, lin)) {
                    rest = *q;
                    out.multiplyBy(lin, 1);
                    progress = true;
                }
            }
        }
    }
    if (!rest.isConstant()) {
        auto vars = rest.support();
        if (vars.size() == 1 && rest.totalDegree() == 4) {
            if (auto g = detail::quadraticFactor(rest, vars.front())) {
                Poly h = *exactDiv(rest, *g);
                out.multiplyBy(*g, 1);
                out.multiplyBy(h, 1);
                return out;
            }
        }
        out.multiplyBy(rest, 1);
    } else {
        out.unit *= rest.constantTerm();
    }
    return out;
}

inline FactoredSolution factorTuple(const SolutionTuple& s) {
    FactoredSolution out{s.sys, {}};
    for (const auto& p : s.polys) out.entries.push_back(factorPoly(p));
    return out;
}

}  // namespace tgwa
