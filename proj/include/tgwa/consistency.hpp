#pragma once

// Binary and ternary consistency relations, symmetric (half-shift) and
// non-symmetric (full-shift) forms, checked as exact polynomial identities.

#include "tgwa/shift_lattice.hpp"

#include <string>
#include <vector>

namespace tgwa {

/// An n-tuple of polynomials over a shift system.
struct SolutionTuple {
    ShiftSystem sys;
    std::vector<Poly> polys;

    SolutionTuple() = default;
    SolutionTuple(ShiftSystem s, std::vector<Poly> p) : sys(std::move(s)), polys(std::move(p)) { check(); }

    bool monic() const {
        return std::all_of(polys.begin(), polys.end(), [](const Poly& p) { return isMonic(p); });
    }

    void check() const {
        if (polys.size() != sys.n())
            throw DimensionError("tuple has " + std::to_string(polys.size()) + " entries, rank is " +
                                 std::to_string(sys.n()));
        for (const auto& p : polys) {
            if (p.varCount() != sys.m()) throw DimensionError("tuple entry lives in the wrong polynomial ring");
            if (p.isZero()) throw std::invalid_argument("tuple entries must be nonzero");
        }
    }

    static SolutionTuple ones(const ShiftSystem& sys) {
        return {sys, std::vector<Poly>(sys.n(), Poly::one(sys.m()))};
    }
};

struct CheckFailure {
    std::string relation;              // "binary", "ternary", "nonsym-binary", "nonsym-ternary", ...
    std::vector<std::size_t> indices;  // 0-based
    Poly difference;                   // lhs - rhs; nonzero for polynomial identities
    std::string detail;                // free-form note for non-polynomial checks
};

struct CheckReport {
    std::vector<CheckFailure> failures;

    bool passed() const { return failures.empty(); }
    explicit operator bool() const { return passed(); }

    CheckReport& merge(const CheckReport& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        return *this;
    }
    void fail(std::string relation, std::vector<std::size_t> indices, Poly difference, std::string detail = {}) {
        failures.push_back({std::move(relation), std::move(indices), std::move(difference), std::move(detail)});
    }
};

namespace detail {

inline RationalVector scaled(const RationalVector& v, const Rational& s) {
    RationalVector out = v;
    for (auto& x : out) x *= s;
    return out;
}

inline RationalVector plus(const RationalVector& a, const RationalVector& b) {
    RationalVector out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

}  // namespace detail

/// p_i(u - a_j/2) p_j(u - a_i/2) = p_i(u + a_j/2) p_j(u + a_i/2) for all i < j.
inline CheckReport checkBinary(const SolutionTuple& s) {
    s.check();
    CheckReport report;
    const auto& sys = s.sys;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < sys.n(); ++i) {
        for (std::size_t j = i + 1; j < sys.n(); ++j) {
            auto hi = detail::scaled(sys.column(i), half);
            auto hj = detail::scaled(sys.column(j), half);
            auto mhi = detail::scaled(sys.column(i), -half);
            auto mhj = detail::scaled(sys.column(j), -half);
            Poly lhs = shift(s.polys[i], hj) * shift(s.polys[j], hi);
            Poly rhs = shift(s.polys[i], mhj) * shift(s.polys[j], mhi);
            Poly diff = lhs - rhs;
            if (!diff.isZero()) report.fail("binary", {i, j}, std::move(diff));
        }
    }
    return report;
}

/// p_k(u - a_i/2 - a_j/2) p_k(u + a_i/2 + a_j/2)
///   = p_k(u - a_i/2 + a_j/2) p_k(u + a_i/2 - a_j/2)   for distinct i, j, k.
/// Vacuous when n <= 2.
inline CheckReport checkTernary(const SolutionTuple& s) {
    s.check();
    CheckReport report;
    const auto& sys = s.sys;
    const Rational half(1, 2);
    for (std::size_t k = 0; k < sys.n(); ++k) {
        if (s.polys[k].isConstant()) continue;
        for (std::size_t i = 0; i < sys.n(); ++i) {
            if (i == k) continue;
            for (std::size_t j = i + 1; j < sys.n(); ++j) {
                if (j == k) continue;
                auto hi = detail::scaled(sys.column(i), half);
                auto hj = detail::scaled(sys.column(j), half);
                auto sum = detail::plus(hi, hj);
                auto dif = detail::plus(hi, detail::scaled(hj, -1));
                const Poly& p = s.polys[k];
                Poly lhs = shift(p, sum) * shift(p, detail::scaled(sum, -1));
                Poly rhs = shift(p, detail::scaled(dif, -1)) * shift(p, dif);
                Poly diff = lhs - rhs;
                if (!diff.isZero()) report.fail("ternary", {i, j, k}, std::move(diff));
            }
        }
    }
    return report;
}

/// sigma_i sigma_j (p_i p_j) = sigma_i(p_i) sigma_j(p_j)           (i != j)
/// sigma_i sigma_k (p_j) p_j = sigma_i(p_j) sigma_k(p_j)            (i, j, k distinct)
inline CheckReport checkNonSymmetric(const SolutionTuple& s) {
    s.check();
    CheckReport report;
    const auto& sys = s.sys;
    for (std::size_t i = 0; i < sys.n(); ++i) {
        for (std::size_t j = i + 1; j < sys.n(); ++j) {
            auto both = detail::plus(sys.column(i), sys.column(j));
            Poly lhs = shift(s.polys[i] * s.polys[j], both);
            Poly rhs = shift(s.polys[i], sys.column(i)) * shift(s.polys[j], sys.column(j));
            Poly diff = lhs - rhs;
            if (!diff.isZero()) report.fail("nonsym-binary", {i, j}, std::move(diff));
        }
    }
    for (std::size_t j = 0; j < sys.n(); ++j) {
        const Poly& p = s.polys[j];
        if (p.isConstant()) continue;
        for (std::size_t i = 0; i < sys.n(); ++i) {
            if (i == j) continue;
            for (std::size_t k = i + 1; k < sys.n(); ++k) {
                if (k == j) continue;
                Poly lhs = shift(p, detail::plus(sys.column(i), sys.column(k))) * p;
                Poly rhs = shift(p, sys.column(i)) * shift(p, sys.column(k));
                Poly diff = lhs - rhs;
                if (!diff.isZero()) report.fail("nonsym-ternary", {i, j, k}, std::move(diff));
            }
        }
    }
    return report;
}

inline CheckReport checkSymmetric(const SolutionTuple& s) { return checkBinary(s).merge(checkTernary(s)); }

/// p~_i = sigma_i^{1/2}(p_i).
inline SolutionTuple symmetrize(const SolutionTuple& s) {
    SolutionTuple out = s;
    for (std::size_t i = 0; i < s.sys.n(); ++i) out.polys[i] = halfShift(s.sys, i, +1, s.polys[i]);
    return out;
}

/// Inverse of symmetrize: p_i = sigma_i^{-1/2}(p~_i).
inline SolutionTuple unsymmetrize(const SolutionTuple& s) {
    SolutionTuple out = s;
    for (std::size_t i = 0; i < s.sys.n(); ++i) out.polys[i] = halfShift(s.sys, i, -1, s.polys[i]);
    return out;
}

inline std::string describe(const CheckFailure& f) {
    std::string idx;
    for (auto i : f.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i + 1);
    std::string s = f.relation + " (" + idx + ")";
    if (!f.difference.isZero()) s += ": difference " + toString(f.difference);
    if (!f.detail.empty()) s += (f.difference.isZero() ? ": " : "; ") + f.detail;
    return s;
}

}  // namespace tgwa
