#pragma once

// Factorization of monic solutions into orbital pieces, and the rank-two
// support of each piece.
//
// Inputs come pre-factored: every factor is a monic polynomial the caller
// asserts to be irreducible. A factor g of entry i belongs to the orbit of
// sigma_i^{-1/2}(g); factors are grouped by that orbit.

#include "tgwa/consistency.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tgwa {

/// unit * prod factor^multiplicity, factors monic and pairwise distinct.
struct FactoredPoly {
    Rational unit = 1;
    std::vector<std::pair<Poly, unsigned>> factors;

    /// Normalizes arbitrary (nonconstant) factors: scales go into the unit,
    /// equal factors merge.
    static FactoredPoly from(Rational unit, const std::vector<std::pair<Poly, unsigned>>& raw) {
        if (unit == 0) throw std::invalid_argument("factored polynomial with zero unit");
        FactoredPoly out;
        out.unit = unit;
        for (const auto& [f, mult] : raw) out.multiplyBy(f, mult);
        return out;
    }

    static FactoredPoly one() { return {}; }

    void multiplyBy(const Poly& f, unsigned mult) {
        if (mult == 0) return;
        if (f.isZero()) throw std::invalid_argument("zero factor");
        if (f.isConstant()) {
            Rational c = f.constantTerm();
            for (unsigned e = 0; e < mult; ++e) unit *= c;
            return;
        }
        auto [scale, monic] = makeMonic(f);
        for (unsigned e = 0; e < mult; ++e) unit *= scale;
        for (auto& [g, m] : factors) {
            if (g == monic) {
                m += mult;
                return;
            }
        }
        factors.emplace_back(std::move(monic), mult);
    }

    bool isOne() const { return factors.empty() && unit == 1; }
    bool isConstant() const { return factors.empty(); }

    unsigned factorCount() const {
        unsigned c = 0;
        for (const auto& [f, m] : factors) c += m;
        return c;
    }

    Poly expand(std::size_t varCount) const {
        Poly p = Poly::constant(varCount, unit);
        for (const auto& [f, m] : factors) p *= f.pow(m);
        return p;
    }
};

struct FactoredSolution {
    ShiftSystem sys;
    std::vector<FactoredPoly> entries;

    SolutionTuple expand() const {
        std::vector<Poly> polys;
        for (const auto& e : entries) polys.push_back(e.expand(sys.m()));
        return {sys, std::move(polys)};
    }

    bool monic() const {
        return std::all_of(entries.begin(), entries.end(), [](const FactoredPoly& e) { return e.unit == 1; });
    }

    /// Same factors with every unit replaced by 1.
    FactoredSolution monicPart() const {
        FactoredSolution out = *this;
        for (auto& e : out.entries) e.unit = 1;
        return out;
    }

    static FactoredSolution ones(const ShiftSystem& sys) { return {sys, std::vector<FactoredPoly>(sys.n())}; }
};

/// Shift of every factor; the unit is unchanged.
inline FactoredPoly shifted(const FactoredPoly& p, std::span<const Rational> t) {
    FactoredPoly out;
    out.unit = p.unit;
    for (const auto& [f, m] : p.factors) out.multiplyBy(shift(f, t), m);
    return out;
}

inline FactoredPoly operator*(FactoredPoly a, const FactoredPoly& b) {
    a.unit *= b.unit;
    for (const auto& [f, m] : b.factors) a.multiplyBy(f, m);
    return a;
}

/// Same unit and the same multiset of monic factors. Sufficient for equality
/// of the expanded products, not necessary unless the factors are irreducible.
inline bool sameFactorization(const FactoredPoly& a, const FactoredPoly& b) {
    if (a.unit != b.unit || a.factors.size() != b.factors.size()) return false;
    for (const auto& [f, m] : a.factors) {
        auto hit = std::find_if(b.factors.begin(), b.factors.end(), [&](const auto& e) { return e.first == f; });
        if (hit == b.factors.end() || hit->second != m) return false;
    }
    return true;
}

namespace detail {

// Compares factored sides first; only expands when the multisets differ.
inline void compareSides(CheckReport& report, const char* relation, std::vector<std::size_t> indices,
                         const FactoredPoly& lhs, const FactoredPoly& rhs, std::size_t m) {
    if (sameFactorization(lhs, rhs)) return;
    Poly diff = lhs.expand(m) - rhs.expand(m);
    if (!diff.isZero()) report.fail(relation, std::move(indices), std::move(diff));
}

}  // namespace detail

/// Binary relations on a factored tuple. Equivalent to checkBinary(p.expand())
/// but avoids expanding products whose factor multisets already agree.
inline CheckReport checkBinary(const FactoredSolution& p) {
    const auto& sys = p.sys;
    if (p.entries.size() != sys.n()) throw DimensionError("factored solution has the wrong number of entries");
    CheckReport report;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < sys.n(); ++i) {
        for (std::size_t j = i + 1; j < sys.n(); ++j) {
            auto hi = detail::scaled(sys.column(i), half);
            auto hj = detail::scaled(sys.column(j), half);
            auto mhi = detail::scaled(sys.column(i), -half);
            auto mhj = detail::scaled(sys.column(j), -half);
            detail::compareSides(report, "binary", {i, j}, shifted(p.entries[i], hj) * shifted(p.entries[j], hi),
                                 shifted(p.entries[i], mhj) * shifted(p.entries[j], mhi), sys.m());
        }
    }
    return report;
}

inline CheckReport checkTernary(const FactoredSolution& p) {
    const auto& sys = p.sys;
    if (p.entries.size() != sys.n()) throw DimensionError("factored solution has the wrong number of entries");
    CheckReport report;
    const Rational half(1, 2);
    for (std::size_t k = 0; k < sys.n(); ++k) {
        const FactoredPoly& e = p.entries[k];
        if (e.isConstant()) continue;
        for (std::size_t i = 0; i < sys.n(); ++i) {
            if (i == k) continue;
            for (std::size_t j = i + 1; j < sys.n(); ++j) {
                if (j == k) continue;
                auto hi = detail::scaled(sys.column(i), half);
                auto hj = detail::scaled(sys.column(j), half);
                auto sum = detail::plus(hi, hj);
                auto dif = detail::plus(hi, detail::scaled(hj, -1));
                detail::compareSides(report, "ternary", {i, j, k},
                                     shifted(e, sum) * shifted(e, detail::scaled(sum, -1)),
                                     shifted(e, detail::scaled(dif, -1)) * shifted(e, dif), sys.m());
            }
        }
    }
    return report;
}

inline CheckReport checkSymmetric(const FactoredSolution& p) { return checkBinary(p).merge(checkTernary(p)); }

struct OrbitalPiece {
    OrbitId orbit;
    FactoredSolution solution;
};

class OrbitDecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Groups the factors of a monic factored solution by Z^n orbit.
///
/// Each piece is anchored at sigma_i^{-1/2} of the first factor of its lowest
/// nonconstant entry; pieces are returned in order of first appearance.
inline std::vector<OrbitalPiece> decompose(const FactoredSolution& p, const SameOrbitOptions& opts = {}) {
    if (p.entries.size() != p.sys.n()) throw DimensionError("factored solution has the wrong number of entries");
    if (!p.monic()) throw std::invalid_argument("decompose expects a monic solution (all units equal to 1)");
    const auto& sys = p.sys;
    const auto all = allIndices(sys);
    std::vector<OrbitalPiece> pieces;
    for (std::size_t i = 0; i < sys.n(); ++i) {
        for (const auto& [g, mult] : p.entries[i].factors) {
            if (!isMonic(g)) throw std::invalid_argument("factor is not monic: " + toString(g));
            Poly q = halfShift(sys, i, -1, g);
            OrbitalPiece* home = nullptr;
            for (auto& piece : pieces) {
                OrbitMatch match = sameOrbit(sys, piece.orbit.generator, q, all, piece.orbit.stabilizer, opts);
                if (match.verdict == OrbitVerdict::Undecided)
                    throw OrbitDecisionError("could not decide whether " + toString(q) + " lies in the orbit of " +
                                             toString(piece.orbit.generator));
                if (match.found()) {
                    home = &piece;
                    break;
                }
            }
            if (!home) {
                pieces.push_back({makeOrbitId(sys, q, all), FactoredSolution::ones(sys)});
                home = &pieces.back();
            }
            home->solution.entries[i].multiplyBy(g, mult);
        }
    }
    return pieces;
}

/// Entrywise product of pieces, expanded.
inline SolutionTuple multiplyPieces(const ShiftSystem& sys, const std::vector<OrbitalPiece>& pieces) {
    SolutionTuple out = SolutionTuple::ones(sys);
    for (const auto& piece : pieces)
        for (std::size_t i = 0; i < sys.n(); ++i) out.polys[i] *= piece.solution.entries[i].expand(sys.m());
    return out;
}

/// Factor membership in sigma_i^{1/2}(orbit), then the binary and ternary relations.
inline CheckReport verifyOrbital(const OrbitalPiece& piece, const SameOrbitOptions& opts = {}) {
    const auto& sys = piece.solution.sys;
    const auto all = allIndices(sys);
    CheckReport report;
    StabilizerLattice stab = stabilizerLattice(sys, piece.orbit.generator, all);
    for (std::size_t i = 0; i < sys.n(); ++i) {
        for (const auto& [g, mult] : piece.solution.entries[i].factors) {
            Poly q = halfShift(sys, i, -1, g);
            OrbitMatch match = sameOrbit(sys, piece.orbit.generator, q, all, stab, opts);
            if (!match.found()) {
                report.fail("orbit-membership", {i}, Poly(sys.m()),
                            std::string(match.verdict == OrbitVerdict::Undecided ? "undecided" : "off-orbit") +
                                " factor " + toString(g));
            }
        }
    }
    report.merge(checkSymmetric(piece.solution));
    return report;
}

/// The index pair {i, j} (i < j) carrying a nontrivial orbital piece, or
/// nullopt when the piece is trivially supported. Throws StructureError when
/// the piece violates the rank-two structure, which means it is not a
/// solution.
inline std::optional<std::pair<std::size_t, std::size_t>> supportPair(const OrbitalPiece& piece) {
    const auto& sys = piece.solution.sys;
    const Poly& q0 = piece.orbit.generator;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < sys.n(); ++i)
        if (!piece.solution.entries[i].isConstant()) active.push_back(i);
    if (active.size() > 2)
        throw StructureError("more than two nonconstant entries in one orbital piece (at most two distinct indices "
                             "can carry an orbital solution)");
    for (std::size_t k = 0; k < sys.n(); ++k) {
        bool inPair = std::find(active.begin(), active.end(), k) != active.end();
        bool fixes = isFixedByShift(q0, sys.column(k));
        if (!inPair && !fixes && !active.empty())
            throw StructureError("entry " + std::to_string(k + 1) +
                                 " is 1 but sigma_" + std::to_string(k + 1) + " moves the orbit generator");
        if (inPair && active.size() == 2 && fixes)
            throw StructureError("entry " + std::to_string(k + 1) + " is nonconstant but sigma_" +
                                 std::to_string(k + 1) + " fixes the orbit generator");
    }
    if (active.size() < 2) return std::nullopt;
    return std::make_pair(active[0], active[1]);
}

}  // namespace tgwa
