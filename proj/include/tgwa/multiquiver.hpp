#pragma once

// Solutions built from an integer matrix beta (m rows = variables, n columns
// = entries) whose rows have at most one positive and one negative entry.
// sigma_i(u_j) = u_j - beta_ji, so alpha = beta.

#include "tgwa/orbital.hpp"

#include <numeric>
#include <vector>

namespace tgwa {

using BetaMatrix = std::vector<std::vector<long>>;

inline CheckReport validateBeta(const BetaMatrix& beta) {
    CheckReport report;
    auto note = [&](std::vector<std::size_t> idx, const std::string& what) {
        report.fail("beta", std::move(idx), Poly(1), what);
    };
    if (beta.empty() || beta.front().empty()) {
        note({}, "beta must be non-empty");
        return report;
    }
    for (std::size_t j = 0; j < beta.size(); ++j) {
        if (beta[j].size() != beta.front().size()) {
            note({j}, "ragged beta matrix");
            continue;
        }
        int pos = 0, neg = 0;
        for (long b : beta[j]) {
            if (b > 0) ++pos;
            if (b < 0) ++neg;
        }
        if (pos > 1) note({j}, "row " + std::to_string(j + 1) + " has more than one positive entry");
        if (neg > 1) note({j}, "row " + std::to_string(j + 1) + " has more than one negative entry");
    }
    return report;
}

namespace detail {

inline void requireValidBeta(const BetaMatrix& beta) {
    CheckReport rep = validateBeta(beta);
    if (!rep.passed()) throw std::invalid_argument("invalid beta: " + rep.failures.front().detail);
}

inline ShiftSystem betaSystem(const BetaMatrix& beta) {
    std::vector<RationalVector> rows;
    for (const auto& r : beta) rows.emplace_back(r.begin(), r.end());
    return ShiftSystem::fromRows(rows);
}

/// Roots l of q_ji: -b~, -b~ + 1, ..., b~ with b~ = (|b| - 1) / 2.
inline std::vector<Rational> symmetricRoots(long b) {
    std::vector<Rational> roots;
    Rational tilde = ratio(std::abs(b) - 1, 2);
    for (long k = 0; k < std::abs(b); ++k) roots.push_back(-tilde + k);
    return roots;
}

inline Poly linearFactor(std::size_t m, std::size_t var, const Rational& root) {
    return Poly::variable(m, var) - Poly::constant(m, root);
}

/// x mod g for rational x and positive integer g, in [0, g).
inline Rational rationalMod(const Rational& x, long g) {
    Rational q = x / g;
    return x - Rational(floorOf(q)) * g;
}

}  // namespace detail

inline long rowGcd(const std::vector<long>& row) {
    long g = 0;
    for (long b : row) g = std::gcd(g, b);
    return g;
}

/// Non-symmetric solution: p_i = prod_j p_ji(u_j) with
/// p_ji = u_j (u_j + 1) ... (u_j + b - 1) for b > 0 and (u_j - 1) ... (u_j - |b|) for b < 0.
inline SolutionTuple buildSolution(const BetaMatrix& beta) {
    detail::requireValidBeta(beta);
    ShiftSystem sys = detail::betaSystem(beta);
    const std::size_t m = sys.m();
    std::vector<Poly> polys(sys.n(), Poly::one(m));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < sys.n(); ++i) {
            long b = beta[j][i];
            for (long k = 0; k < std::abs(b); ++k)
                polys[i] *= detail::linearFactor(m, j, b > 0 ? Rational(-k) : Rational(k + 1));
        }
    }
    return {sys, std::move(polys)};
}

/// Factored form of the symmetric solution q_i = prod_j prod_{l} (u_j - l).
inline FactoredSolution symmetrizedFactors(const BetaMatrix& beta) {
    detail::requireValidBeta(beta);
    ShiftSystem sys = detail::betaSystem(beta);
    FactoredSolution out = FactoredSolution::ones(sys);
    for (std::size_t j = 0; j < sys.m(); ++j)
        for (std::size_t i = 0; i < sys.n(); ++i)
            for (const auto& l : detail::symmetricRoots(beta[j][i]))
                out.entries[i].multiplyBy(detail::linearFactor(sys.m(), j, l), 1);
    return out;
}

/// Symmetric solution. Agrees with symmetrize(buildSolution(beta)) after the
/// overall shift u -> u + 1/2; that agreement is checked on every call.
inline SolutionTuple symmetrizedSolution(const BetaMatrix& beta) {
    SolutionTuple q = symmetrizedFactors(beta).expand();
    SolutionTuple viaShift = symmetrize(buildSolution(beta));
    RationalVector minusHalf(q.sys.m(), Rational(-1, 2));
    for (auto& p : viaShift.polys) p = shift(p, minusHalf);
    if (viaShift.polys != q.polys)
        throw std::logic_error("symmetrized product formula disagrees with the shifted symmetrization");
    return q;
}

struct ResiduePiece {
    std::size_t row = 0;     // variable u_{row+1}
    Rational residue;        // class of (l - beta_ji / 2) modulo gamma_row
    bool oneSided = false;   // row has a single nonzero entry
    OrbitalPiece piece;
};

/// Number of residue-class pieces, sum over nonzero rows of the row gcd.
inline long residuePieceCount(const BetaMatrix& beta) {
    long total = 0;
    for (const auto& row : beta) total += rowGcd(row);
    return total;
}

/// Splits the symmetric solution per row j into gamma_j orbital pieces. The
/// factor (u_j - l) of entry i lies on the orbit of u_j - (l - beta_ji/2),
/// and two such orbits agree iff the constants agree modulo gamma_j.
inline std::vector<ResiduePiece> factorByResidue(const BetaMatrix& beta) {
    detail::requireValidBeta(beta);
    ShiftSystem sys = detail::betaSystem(beta);
    const std::size_t m = sys.m();
    std::vector<ResiduePiece> out;
    for (std::size_t j = 0; j < m; ++j) {
        long gamma = rowGcd(beta[j]);
        if (gamma == 0) throw std::invalid_argument("factorByResidue: row " + std::to_string(j + 1) + " is zero");
        std::size_t nonzero = 0;
        for (long b : beta[j]) nonzero += b != 0 ? 1 : 0;
        std::size_t first = out.size();
        for (std::size_t i = 0; i < sys.n(); ++i) {
            long b = beta[j][i];
            for (const auto& l : detail::symmetricRoots(b)) {
                Rational key = detail::rationalMod(l - ratio(b, 2), gamma);
                ResiduePiece* home = nullptr;
                for (std::size_t k = first; k < out.size(); ++k)
                    if (out[k].residue == key) home = &out[k];
                if (!home) {
                    ResiduePiece fresh;
                    fresh.row = j;
                    fresh.residue = key;
                    fresh.oneSided = nonzero == 1;
                    fresh.piece.orbit = makeOrbitId(sys, detail::linearFactor(m, j, key), allIndices(sys));
                    fresh.piece.solution = FactoredSolution::ones(sys);
                    out.push_back(std::move(fresh));
                    home = &out.back();
                }
                home->piece.solution.entries[i].multiplyBy(detail::linearFactor(m, j, l), 1);
            }
        }
    }
    return out;
}

}  // namespace tgwa
