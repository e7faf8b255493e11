#pragma once

// The Z^n shift action on Q[u1..um] induced by a matrix alpha:
// sigma_i(p) = p(u - alpha_i), sigma_i^{1/2}(p) = p(u - alpha_i/2).
// Stabilizer lattices come from the gradient criterion
//     sigma(u) = u - beta fixes q  <=>  <grad q, beta> == 0,
// which turns "which integer combinations fix q" into an integer kernel.

#include "tgwa/linalg.hpp"
#include "tgwa/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgwa {

using IntVector = std::vector<long>;

/// alpha in M_{m x n}(Q); column i is the shift vector alpha_i.
class ShiftSystem {
public:
    ShiftSystem() = default;

    /// Builds from m rows of length n (the matrix as written).
    static ShiftSystem fromRows(const std::vector<RationalVector>& rows) {
        if (rows.empty() || rows.front().empty()) throw DimensionError("shift matrix must be non-empty");
        std::size_t n = rows.front().size();
        for (const auto& r : rows)
            if (r.size() != n) throw DimensionError("ragged shift matrix");
        ShiftSystem s;
        s.columns_.assign(n, RationalVector(rows.size()));
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) s.columns_[i][j] = rows[j][i];
        return s;
    }

    static ShiftSystem fromColumns(std::vector<RationalVector> columns) {
        if (columns.empty() || columns.front().empty()) throw DimensionError("shift matrix must be non-empty");
        for (const auto& c : columns)
            if (c.size() != columns.front().size()) throw DimensionError("ragged shift matrix");
        ShiftSystem s;
        s.columns_ = std::move(columns);
        return s;
    }

    std::size_t m() const { return columns_.empty() ? 0 : columns_.front().size(); }
    std::size_t n() const { return columns_.size(); }

    const RationalVector& column(std::size_t i) const {
        checkIndex(i);
        return columns_[i];
    }
    const Rational& entry(std::size_t row, std::size_t col) const { return column(col).at(row); }

    std::vector<RationalVector> rows() const {
        std::vector<RationalVector> out(m(), RationalVector(n()));
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = 0; j < m(); ++j) out[j][i] = columns_[i][j];
        return out;
    }

    /// sum_k coeffs[k] * alpha_{indices[k]}
    RationalVector combination(const std::vector<std::size_t>& indices, const RationalVector& coeffs) const {
        if (indices.size() != coeffs.size()) throw DimensionError("combination length mismatch");
        RationalVector t(m(), 0);
        for (std::size_t k = 0; k < indices.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const auto& col = column(indices[k]);
            for (std::size_t j = 0; j < t.size(); ++j) t[j] += coeffs[k] * col[j];
        }
        return t;
    }

    void checkIndex(std::size_t i) const {
        if (i >= columns_.size())
            throw std::out_of_range("shift index " + std::to_string(i + 1) + " out of range (rank " +
                                    std::to_string(columns_.size()) + ")");
    }

    friend bool operator==(const ShiftSystem&, const ShiftSystem&) = default;

private:
    std::vector<RationalVector> columns_;
};

inline std::vector<std::size_t> allIndices(const ShiftSystem& sys) {
    std::vector<std::size_t> s(sys.n());
    std::iota(s.begin(), s.end(), std::size_t{0});
    return s;
}

/// sigma_i^{sign/2}(p) = p(u - sign * alpha_i / 2).
inline Poly halfShift(const ShiftSystem& sys, std::size_t i, int sign, const Poly& p) {
    sys.checkIndex(i);
    if (sign != 1 && sign != -1) throw std::invalid_argument("halfShift sign must be +1 or -1");
    RationalVector t = sys.column(i);
    for (auto& x : t) x *= Rational(sign, 2);
    return shift(p, t);
}

/// Shift by sum_k coeffs[k] * alpha_{indices[k]}; coefficients may be half-integers.
inline Poly shiftAlong(const ShiftSystem& sys, const std::vector<std::size_t>& indices, const RationalVector& coeffs,
                       const Poly& p) {
    return shift(p, sys.combination(indices, coeffs));
}

/// (k_1..k_n).p = sigma_1^{k_1} ... sigma_n^{k_n} p, restricted to an index subset.
inline Poly znAction(const ShiftSystem& sys, const std::vector<std::size_t>& indices, const IntVector& k,
                     const Poly& p) {
    if (k.size() != indices.size()) throw DimensionError("shift exponent vector length mismatch");
    RationalVector c(k.begin(), k.end());
    return shiftAlong(sys, indices, c, p);
}

inline Poly znAction(const ShiftSystem& sys, const IntVector& k, const Poly& p) {
    if (k.size() != sys.n()) throw DimensionError("shift exponent vector must have length n");
    return znAction(sys, allIndices(sys), k, p);
}

/// <grad q, beta> == 0, equivalently q(u - r beta) = q for all integers r.
inline bool isFixedByShift(const Poly& q, std::span<const Rational> beta) {
    return directionalDerivative(q, beta).isZero();
}

/// Sublattice of Z^S acting trivially on a polynomial. Basis rows are kept in
/// Hermite normal form, so equal lattices compare equal.
struct StabilizerLattice {
    std::size_t ambientRank = 0;
    std::vector<IntVector> basis;

    std::size_t rank() const { return basis.size(); }
    bool isFull() const { return basis.size() == ambientRank; }

    /// Membership test against the HNF basis.
    bool contains(const IntVector& v) const {
        if (v.size() != ambientRank) return false;
        std::vector<Integer> rem(v.begin(), v.end());
        for (const auto& row : basis) {
            std::size_t c = 0;
            while (row[c] == 0) ++c;
            Integer piv = row[c];
            if (rem[c] % piv != 0) return false;
            Integer q = rem[c] / piv;
            for (std::size_t k = 0; k < ambientRank; ++k) rem[k] -= q * row[k];
        }
        return std::all_of(rem.begin(), rem.end(), [](const Integer& x) { return x == 0; });
    }

    /// Canonical coset representative of v modulo the lattice.
    IntVector reduce(const IntVector& v) const {
        std::vector<Integer> rem(v.begin(), v.end());
        for (const auto& row : basis) {
            std::size_t c = 0;
            while (row[c] == 0) ++c;
            Integer q;
            Integer piv = row[c];
            mpz_fdiv_q(q.get_mpz_t(), rem[c].get_mpz_t(), piv.get_mpz_t());
            for (std::size_t k = 0; k < ambientRank; ++k) rem[k] -= q * row[k];
        }
        IntVector out;
        for (const auto& x : rem) out.push_back(toLong(x));
        return out;
    }

    friend bool operator==(const StabilizerLattice&, const StabilizerLattice&) = default;
};

inline std::string toString(const StabilizerLattice& lat) {
    std::string s = "<";
    for (std::size_t b = 0; b < lat.basis.size(); ++b) {
        if (b) s += ", ";
        s += "(";
        for (std::size_t k = 0; k < lat.basis[b].size(); ++k) {
            if (k) s += ",";
            s += std::to_string(lat.basis[b][k]);
        }
        s += ")";
    }
    return s + ">";
}

namespace detail {

inline StabilizerLattice latticeFromRows(std::size_t ambient, const linalg::IntegerMatrix& rows) {
    StabilizerLattice lat;
    lat.ambientRank = ambient;
    for (const auto& r : rows) {
        IntVector v;
        for (const auto& x : r) v.push_back(toLong(x));
        lat.basis.push_back(std::move(v));
    }
    return lat;
}

/// Coefficient matrix whose column k lists the coefficients of polys[k].
inline linalg::RationalMatrix coefficientColumns(const std::vector<Poly>& polys, const Poly* rhs = nullptr,
                                                 std::vector<Rational>* rhsOut = nullptr) {
    std::set<Monomial, std::greater<>> monos;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) monos.insert(m);
    if (rhs)
        for (const auto& [m, c] : rhs->terms()) monos.insert(m);
    linalg::RationalMatrix a;
    for (const auto& m : monos) {
        std::vector<Rational> row;
        for (const auto& p : polys) row.push_back(p.coefficient(m));
        a.push_back(std::move(row));
        if (rhs && rhsOut) rhsOut->push_back(rhs->coefficient(m));
    }
    return a;
}

}  // namespace detail

/// Integer kernel of Z^S -> R, e_i -> <grad q, alpha_i>, as a saturated HNF basis.
inline StabilizerLattice stabilizerLattice(const ShiftSystem& sys, const Poly& q,
                                           const std::vector<std::size_t>& indices) {
    std::vector<Poly> images;
    for (auto i : indices) images.push_back(directionalDerivative(q, sys.column(i)));
    auto a = detail::coefficientColumns(images);
    return detail::latticeFromRows(indices.size(), linalg::integerKernel(a, indices.size()));
}

/// Monic, nonconstant polynomial representing a Z^n orbit, together with
/// the index subset it is considered over and its stabilizer there.
/// Irreducibility of the generator is the caller's responsibility.
struct OrbitId {
    Poly generator;
    std::vector<std::size_t> indexSet;
    StabilizerLattice stabilizer;
};

inline OrbitId makeOrbitId(const ShiftSystem& sys, const Poly& generator, std::vector<std::size_t> indexSet) {
    if (generator.isConstant()) throw std::invalid_argument("orbit generator must be nonconstant");
    if (!isMonic(generator)) throw std::invalid_argument("orbit generator must be monic: " + toString(generator));
    for (auto i : indexSet) sys.checkIndex(i);
    StabilizerLattice st = stabilizerLattice(sys, generator, indexSet);
    return {generator, std::move(indexSet), std::move(st)};
}

enum class OrbitVerdict { Found, NotInOrbit, Undecided };

struct OrbitMatch {
    OrbitVerdict verdict = OrbitVerdict::NotInOrbit;
    IntVector shift;  // valid when verdict == Found; znAction(shift, q) == q2

    bool found() const { return verdict == OrbitVerdict::Found; }
};

struct SameOrbitOptions {
    long searchRadius = 64;
};

/// Decides whether q2 = (k).q for some k in Z^S.
///
/// Shifts preserve the leading form, and the degree d-1 component of
/// q(u - t) is q_{d-1} - <grad L, t>, which is linear in k. Integer solutions
/// of that system form a coset of a lattice containing the stabilizer. When the
/// two lattices have equal rank one substitution decides the question;
/// otherwise the extra directions are searched up to the configured radius.
inline OrbitMatch sameOrbit(const ShiftSystem& sys, const Poly& q, const Poly& q2,
                            const std::vector<std::size_t>& indices, const StabilizerLattice& stab,
                            const SameOrbitOptions& opts = {}) {
    q.checkSameRing(q2);
    const std::size_t s = indices.size();
    OrbitMatch none{OrbitVerdict::NotInOrbit, {}};
    if (q == q2) return {OrbitVerdict::Found, IntVector(s, 0)};
    int d = q.totalDegree();
    if (d != q2.totalDegree() || d <= 0) return none;
    Poly lead = q.homogeneousPart(d);
    if (lead != q2.homogeneousPart(d)) return none;

    std::vector<Poly> cols;
    for (auto i : indices) cols.push_back(directionalDerivative(lead, sys.column(i)));
    Poly rhs = q.homogeneousPart(d - 1) - q2.homogeneousPart(d - 1);
    std::vector<Rational> b;
    auto a = detail::coefficientColumns(cols, &rhs, &b);
    auto sol = linalg::solveInteger(a, b, s);
    if (!sol) return none;

    auto verify = [&](const std::vector<Integer>& k) -> std::optional<IntVector> {
        IntVector kk;
        for (const auto& x : k) kk.push_back(toLong(x));
        if (znAction(sys, indices, kk, q) == q2) return stab.reduce(kk);
        return std::nullopt;
    };

    const std::size_t kernelRank = sol->kernel.size();
    if (kernelRank == stab.rank()) {
        if (auto k = verify(sol->particular)) return {OrbitVerdict::Found, *k};
        return none;
    }

    // Directions of the linear solution lattice not accounted for by the
    // stabilizer: write the stabilizer in kernel coordinates and split off a
    // unimodular complement.
    const linalg::IntegerMatrix& kern = sol->kernel;
    linalg::RationalMatrix kt(s, std::vector<Rational>(kernelRank));
    for (std::size_t r = 0; r < kernelRank; ++r)
        for (std::size_t c = 0; c < s; ++c) kt[c][r] = kern[r][c];
    linalg::IntegerMatrix coords;
    for (const auto& sv : stab.basis) {
        std::vector<Rational> rhsv(sv.begin(), sv.end());
        auto c = linalg::solveRational(kt, rhsv, kernelRank);
        if (!c) throw std::logic_error("stabilizer not contained in the linear solution lattice");
        linalg::IntegerVector ci;
        for (const auto& x : *c) {
            if (!isInteger(x)) throw std::logic_error("stabilizer not saturated in the solution lattice");
            ci.push_back(x.get_num());
        }
        coords.push_back(std::move(ci));
    }
    linalg::IntegerMatrix complement;
    {
        linalg::ColumnEchelon ech = linalg::columnEchelon(coords, kernelRank);
        for (std::size_t r = ech.rank; r < kernelRank; ++r) {
            linalg::IntegerVector v(s, 0);
            for (std::size_t j = 0; j < kernelRank; ++j)
                for (std::size_t c = 0; c < s; ++c) v[c] += ech.uInverse[r][j] * kern[j][c];
            complement.push_back(std::move(v));
        }
    }
    const std::size_t dims = complement.size();
    // Enumerate shells of growing sup-norm so small shifts are found first.
    for (long radius = 0; radius <= opts.searchRadius; ++radius) {
        std::vector<long> z(dims, -radius);
        for (;;) {
            bool onShell = radius == 0 || std::any_of(z.begin(), z.end(), [&](long x) {
                               return x == radius || x == -radius;
                           });
            if (onShell) {
                std::vector<Integer> k = sol->particular;
                for (std::size_t b2 = 0; b2 < dims; ++b2)
                    for (std::size_t c = 0; c < s; ++c) k[c] += Integer(static_cast<long>(z[b2])) * complement[b2][c];
                if (auto found = verify(k)) return {OrbitVerdict::Found, *found};
            }
            std::size_t pos = 0;
            while (pos < dims && z[pos] == radius) z[pos++] = -radius;
            if (pos == dims) break;
            ++z[pos];
        }
    }
    return {OrbitVerdict::Undecided, {}};
}

inline OrbitMatch sameOrbit(const ShiftSystem& sys, const Poly& q, const Poly& q2,
                            const std::vector<std::size_t>& indices, const SameOrbitOptions& opts = {}) {
    return sameOrbit(sys, q, q2, indices, stabilizerLattice(sys, q, indices), opts);
}

/// Cheap rejection of generators that are visibly reducible: a nontrivial
/// monomial content, or a univariate polynomial of degree >= 2 with a
/// rational root. Passing this check does not certify irreducibility.
inline bool looksReducible(const Poly& q) {
    if (q.isConstant()) return true;
    Monomial content = q.terms().begin()->first;
    for (const auto& [m, c] : q.terms())
        for (std::size_t k = 0; k < m.size(); ++k) content[k] = std::min(content[k], m[k]);
    if (Poly::monomialDegree(content) > 0 && q.totalDegree() > Poly::monomialDegree(content)) return true;
    auto vars = q.support();
    if (vars.size() != 1 || q.totalDegree() < 2) return false;
    std::size_t v = vars.front();
    // Rational root theorem on the primitive integer multiple.
    Integer l = 1;
    for (const auto& [m, c] : q.terms()) l = lcm(l, Integer(c.get_den()));
    Integer lead = Rational(leadingCoefficient(q) * l).get_num();
    Integer tail = Rational(q.constantTerm() * l).get_num();
    if (tail == 0) return true;
    auto divisorsOf = [](Integer x) {
        std::vector<Integer> ds;
        x = abs(x);
        if (x > 1000000) return ds;  // too large to enumerate; be permissive
        for (Integer d = 1; d * d <= x; ++d) {
            if (x % d == 0) {
                ds.push_back(d);
                if (d * d != x) ds.push_back(x / d);
            }
        }
        return ds;
    };
    std::vector<Rational> point(q.varCount(), 0);
    for (const auto& p : divisorsOf(tail)) {
        for (const auto& r : divisorsOf(lead)) {
            for (int sign : {1, -1}) {
                Rational cand(p * sign, r);
                cand.canonicalize();
                point[v] = cand;
                if (evaluate(q, point) == 0) return true;
            }
        }
    }
    return false;
}

}  // namespace tgwa
