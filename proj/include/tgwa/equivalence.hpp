#pragma once

// Equivalence of pairs (alpha, p) under a supplied ring automorphism psi of
// Q[u1..um], and the GL_m action on pairs.
//
// GL_m convention: g sends (alpha, p) to (g alpha, p o g^{-1}), which is the
// pair intertwined by psi_g(u) = g^{-1} u. With this convention
// applyLinear(g, applyLinear(h, x)) == applyLinear(g h, x).

#include "tgwa/orbital.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace tgwa {

class UnverifiedAutomorphismError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// psi(u_j) = forward[j], psi^{-1}(u_j) = inverse[j]; construct with make(),
/// which checks both compositions against the identity.
class AutomorphismSpec {
public:
    static AutomorphismSpec make(std::vector<Poly> forward, std::vector<Poly> inverse) {
        if (forward.empty() || forward.size() != inverse.size())
            throw DimensionError("automorphism needs m forward and m inverse images");
        const std::size_t m = forward.size();
        for (const auto& p : forward)
            if (p.varCount() != m) throw DimensionError("forward image lives in the wrong ring");
        for (const auto& p : inverse)
            if (p.varCount() != m) throw DimensionError("inverse image lives in the wrong ring");
        for (std::size_t j = 0; j < m; ++j) {
            Poly uj = Poly::variable(m, j);
            if (substitute(forward[j], inverse) != uj || substitute(inverse[j], forward) != uj)
                throw UnverifiedAutomorphismError("forward and inverse images do not compose to the identity at u" +
                                                  std::to_string(j + 1));
        }
        AutomorphismSpec s;
        s.forward_ = std::move(forward);
        s.inverse_ = std::move(inverse);
        return s;
    }

    static AutomorphismSpec identity(std::size_t m) {
        std::vector<Poly> vars;
        for (std::size_t j = 0; j < m; ++j) vars.push_back(Poly::variable(m, j));
        return make(vars, vars);
    }

    std::size_t m() const { return forward_.size(); }
    const std::vector<Poly>& forward() const { return forward_; }
    const std::vector<Poly>& inverse() const { return inverse_; }
    AutomorphismSpec inverted() const { return make(inverse_, forward_); }

private:
    std::vector<Poly> forward_, inverse_;
};

inline Poly applySubstitution(const AutomorphismSpec& psi, const Poly& p) {
    if (psi.m() == 0) throw UnverifiedAutomorphismError("empty automorphism");
    if (p.varCount() != psi.m()) throw DimensionError("automorphism and polynomial live in different rings");
    return substitute(p, psi.forward());
}

/// (1) psi(sigma_i(u_j)) == sigma'_i(psi(u_j)) for all i, j;
/// (2) psi(p_i) == c_i p'_i with c_i a nonzero rational.
inline CheckReport checkEquivalence(const AutomorphismSpec& psi, const SolutionTuple& a, const SolutionTuple& b) {
    CheckReport report;
    const std::size_t m = psi.m();
    if (a.sys.m() != m || b.sys.m() != m) {
        report.fail("equivalence", {}, Poly(std::max<std::size_t>(m, 1)), "pairs and automorphism disagree on m");
        return report;
    }
    if (a.sys.n() != b.sys.n()) {
        report.fail("equivalence", {}, Poly(m), "pairs have different ranks n");
        return report;
    }
    for (std::size_t i = 0; i < a.sys.n(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Poly lhs = psi.forward()[j] - Poly::constant(m, a.sys.entry(j, i));
            Poly rhs = shift(psi.forward()[j], b.sys.column(i));
            Poly diff = lhs - rhs;
            if (!diff.isZero()) report.fail("intertwining", {i, j}, std::move(diff));
        }
    }
    for (std::size_t i = 0; i < a.sys.n(); ++i) {
        Poly image = applySubstitution(psi, a.polys[i]);
        const Poly& target = b.polys[i];
        Rational c = leadingCoefficient(image) / leadingCoefficient(target);
        Poly diff = image - target * c;
        if (!diff.isZero()) report.fail("scalar-multiple", {i}, std::move(diff));
    }
    return report;
}

class SingularMatrixError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<Poly> linearImages(const linalg::RationalMatrix& g) {
    const std::size_t m = g.size();
    std::vector<Poly> out;
    for (std::size_t j = 0; j < m; ++j) {
        Poly p(m);
        for (std::size_t k = 0; k < m; ++k)
            if (g[j][k] != 0) p += Poly::variable(m, k) * g[j][k];
        out.push_back(std::move(p));
    }
    return out;
}

inline linalg::RationalMatrix checkedInverse(const linalg::RationalMatrix& g) {
    for (const auto& row : g)
        if (row.size() != g.size()) throw DimensionError("g must be square");
    auto inv = linalg::inverse(g);
    if (!inv) throw SingularMatrixError("g is singular");
    return *inv;
}

// Columns g * alpha_i.
inline ShiftSystem movedSystem(const linalg::RationalMatrix& g, const ShiftSystem& sys) {
    std::vector<RationalVector> cols;
    for (std::size_t i = 0; i < sys.n(); ++i) {
        const auto& a = sys.column(i);
        RationalVector c(g.size(), 0);
        for (std::size_t r = 0; r < g.size(); ++r)
            for (std::size_t k = 0; k < g.size(); ++k) c[r] += g[r][k] * a[k];
        cols.push_back(std::move(c));
    }
    return ShiftSystem::fromColumns(std::move(cols));
}

}  // namespace detail

/// psi_g(u) = g^{-1} u.
inline AutomorphismSpec psiFromLinear(const linalg::RationalMatrix& g) {
    auto inv = detail::checkedInverse(g);
    return AutomorphismSpec::make(detail::linearImages(inv), detail::linearImages(g));
}

/// (alpha, p) -> (g alpha, p o g^{-1}).
inline SolutionTuple applyLinear(const linalg::RationalMatrix& g, const SolutionTuple& pair) {
    if (g.size() != pair.sys.m()) throw DimensionError("g must be m x m");
    auto inv = detail::checkedInverse(g);
    auto images = detail::linearImages(inv);
    std::vector<Poly> polys;
    for (const auto& p : pair.polys) polys.push_back(substitute(p, images));
    return {detail::movedSystem(g, pair.sys), std::move(polys)};
}

/// Factorwise version; much cheaper than expanding first.
inline FactoredSolution applyLinear(const linalg::RationalMatrix& g, const FactoredSolution& pair) {
    if (g.size() != pair.sys.m()) throw DimensionError("g must be m x m");
    auto images = detail::linearImages(detail::checkedInverse(g));
    FactoredSolution out{detail::movedSystem(g, pair.sys), {}};
    for (const auto& e : pair.entries) {
        FactoredPoly moved;
        moved.unit = e.unit;
        for (const auto& [f, mult] : e.factors) moved.multiplyBy(substitute(f, images), mult);
        out.entries.push_back(std::move(moved));
    }
    return out;
}

/// Bounded convenience search over signed permutation matrices g such that
/// psi_g witnesses the equivalence of a and b. Limited to m <= 6.
inline std::optional<linalg::RationalMatrix> searchSignedPermutation(const SolutionTuple& a, const SolutionTuple& b) {
    const std::size_t m = a.sys.m();
    if (m == 0 || m > 6 || b.sys.m() != m || a.sys.n() != b.sys.n()) return std::nullopt;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        for (unsigned long signs = 0; signs < (1ul << m); ++signs) {
            linalg::RationalMatrix g(m, std::vector<Rational>(m, 0));
            for (std::size_t r = 0; r < m; ++r) g[r][perm[r]] = (signs >> r) & 1 ? -1 : 1;
            if (checkEquivalence(psiFromLinear(g), a, b).passed()) return g;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace tgwa
