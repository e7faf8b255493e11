#pragma once

// Independent checks used by the tests: pointwise evaluation at random
// rational points, direct substitution with hand-written shift vectors, and
// brute-force orbit search. None of these call the code paths they verify.

#include "tgwa/poly.hpp"
#include "tgwa/shift_lattice.hpp"

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using tgwa::Poly;
using tgwa::Rational;

inline std::vector<Rational> randomPoint(std::mt19937_64& rng, std::size_t m) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    std::vector<Rational> pt;
    for (std::size_t k = 0; k < m; ++k) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        pt.push_back(r);
    }
    return pt;
}

/// Every coefficient stored in lowest terms with a positive denominator.
inline bool reduced(const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
        if (g != 1 || c.get_den() <= 0) return false;
    }
    return true;
}

/// Horner-free term-by-term evaluation, independent of tgwa::evaluate.
inline Rational eval(const Poly& p, const std::vector<Rational>& pt) {
    Rational acc = 0;
    for (const auto& [mono, c] : p.terms()) {
        Rational t = c;
        for (std::size_t k = 0; k < mono.size(); ++k)
            for (unsigned e = 0; e < mono[k]; ++e) t *= pt[k];
        acc += t;
    }
    return acc;
}

/// p(u - t) evaluated at pt, by moving the point instead of the polynomial.
inline Rational evalShifted(const Poly& p, const std::vector<Rational>& t, const std::vector<Rational>& pt) {
    std::vector<Rational> moved = pt;
    for (std::size_t k = 0; k < pt.size(); ++k) moved[k] -= t[k];
    return eval(p, moved);
}

/// Agreement of two polynomials at `count` random points (degree is small, so
/// agreement at many random points is a strong check).
inline bool agreeAtRandomPoints(const Poly& a, const Poly& b, std::uint64_t seed, int count = 12) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < count; ++k) {
        auto pt = randomPoint(rng, a.varCount());
        if (eval(a, pt) != eval(b, pt)) return false;
    }
    return true;
}

/// Literal reading of "sigma fixes q": q(u - beta) == q(u) and q(u - 7 beta) == q(u)
/// compared at random points.
inline bool fixedByDirectComparison(const Poly& q, const std::vector<Rational>& beta, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> seven = beta;
    for (auto& x : seven) x *= 7;
    for (int k = 0; k < 10; ++k) {
        auto pt = randomPoint(rng, q.varCount());
        Rational base = eval(q, pt);
        if (evalShifted(q, beta, pt) != base || evalShifted(q, seven, pt) != base) return false;
    }
    return true;
}

/// Brute-force search for k in a box with (k . alpha) shift of q equal to q2.
inline std::optional<std::vector<long>> bruteForceOrbit(const tgwa::ShiftSystem& sys, const Poly& q, const Poly& q2,
                                                         const std::vector<std::size_t>& indices, long radius) {
    const std::size_t s = indices.size();
    std::vector<long> k(s, -radius);
    while (true) {
        std::vector<Rational> t(sys.m(), 0);
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t j = 0; j < sys.m(); ++j) t[j] += Rational(k[a]) * sys.entry(j, indices[a]);
        Poly shifted(sys.m());
        for (const auto& [mono, c] : q.terms()) {
            Poly term = Poly::constant(sys.m(), c);
            for (std::size_t j = 0; j < mono.size(); ++j) {
                Poly lin = Poly::variable(sys.m(), j) - Poly::constant(sys.m(), t[j]);
                for (unsigned e = 0; e < mono[j]; ++e) term *= lin;
            }
            shifted += term;
        }
        if (shifted == q2) return k;
        std::size_t a = 0;
        while (a < s && k[a] == radius) k[a++] = -radius;
        if (a == s) return std::nullopt;
        ++k[a];
    }
}

}  // namespace oracle
