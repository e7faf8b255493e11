#pragma once

// Small dense exact linear algebra: rational row reduction and integer
// lattices (column echelon forms with unimodular transforms, integer kernels,
// integer solutions of rational systems, Hermite normal form).

#include "tgwa/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tgwa::linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;
using IntegerVector = std::vector<Integer>;

struct Rref {
    RationalMatrix rows;
    std::vector<std::size_t> pivots;
};

inline Rref rref(RationalMatrix a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = 0; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return {std::move(a), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& a, std::size_t cols) { return rref(a, cols).pivots.size(); }

/// Basis of {x : A x = 0} over Q.
inline RationalMatrix rationalKernel(const RationalMatrix& a, std::size_t cols) {
    Rref red = rref(a, cols);
    std::vector<bool> isPivot(cols, false);
    for (auto c : red.pivots) isPivot[c] = true;
    RationalMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (isPivot[f]) continue;
        std::vector<Rational> v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of A x = b over Q, if any.
inline std::optional<std::vector<Rational>> solveRational(const RationalMatrix& a, const std::vector<Rational>& b,
                                                          std::size_t cols) {
    RationalMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Rref red = rref(std::move(aug), cols + 1);
    std::vector<Rational> x(cols, 0);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        if (red.pivots[i] == cols) return std::nullopt;
        x[red.pivots[i]] = red.rows[i][cols];
    }
    return x;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.empty()) return {};
    std::size_t inner = b.size();
    std::size_t cols = b.empty() ? 0 : b.front().size();
    RationalMatrix out(a.size(), std::vector<Rational>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("matrix dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

inline RationalMatrix identity(std::size_t n) {
    RationalMatrix id(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

/// Exact inverse of a square matrix; nullopt when singular.
inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    std::size_t n = a.size();
    RationalMatrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("inverse of a non-square matrix");
        aug[i] = a[i];
        aug[i].resize(2 * n, 0);
        aug[i][n + i] = 1;
    }
    Rref red = rref(std::move(aug), n);
    if (red.pivots.size() != n) return std::nullopt;
    RationalMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(red.rows[i].begin() + static_cast<long>(n), red.rows[i].end());
    return inv;
}

/// Scales each row of a rational matrix by the lcm of its denominators.
/// The same factor is applied to the matching entry of rhs, when given.
inline IntegerMatrix clearDenominators(const RationalMatrix& a, std::vector<Rational>* rhs = nullptr) {
    IntegerMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer l = 1;
        for (const auto& x : a[i]) l = lcm(l, Integer(x.get_den()));
        if (rhs) l = lcm(l, Integer((*rhs)[i].get_den()));
        out[i].reserve(a[i].size());
        for (const auto& x : a[i]) {
            Rational s = x * l;
            out[i].push_back(s.get_num());
        }
        if (rhs) (*rhs)[i] *= l;
    }
    return out;
}

/// A * U = H with U unimodular, H in column echelon form: the first `rank`
/// columns carry the pivots (pivotRows[k] is the pivot row of column k) and
/// the remaining columns of H are zero. uInverse is U^{-1}.
struct ColumnEchelon {
    IntegerMatrix h;
    IntegerMatrix u;
    IntegerMatrix uInverse;
    std::vector<std::size_t> pivotRows;
    std::size_t rank = 0;
};

inline ColumnEchelon columnEchelon(IntegerMatrix a, std::size_t cols) {
    IntegerMatrix u(cols, IntegerVector(cols, 0));
    IntegerMatrix uinv(cols, IntegerVector(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = uinv[i][i] = 1;

    auto swapCols = [&](std::size_t p, std::size_t q) {
        for (auto& row : a) std::swap(row[p], row[q]);
        for (auto& row : u) std::swap(row[p], row[q]);
        std::swap(uinv[p], uinv[q]);
    };
    // (col_p, col_q) <- (col_p, col_q) * [[x, -b/g], [y, a/g]]
    auto combine = [&](std::size_t p, std::size_t q, const Integer& x, const Integer& y, const Integer& ag,
                       const Integer& bg) {
        auto apply = [&](IntegerMatrix& m) {
            for (auto& row : m) {
                Integer vp = row[p], vq = row[q];
                row[p] = x * vp + y * vq;
                row[q] = -bg * vp + ag * vq;
            }
        };
        apply(a);
        apply(u);
        for (std::size_t k = 0; k < cols; ++k) {
            Integer rp = uinv[p][k], rq = uinv[q][k];
            uinv[p][k] = ag * rp + bg * rq;
            uinv[q][k] = -y * rp + x * rq;
        }
    };

    std::vector<std::size_t> pivotRows;
    std::size_t pc = 0;
    for (std::size_t r = 0; r < a.size() && pc < cols; ++r) {
        for (std::size_t c = pc + 1; c < cols; ++c) {
            if (a[r][c] == 0) continue;
            if (a[r][pc] == 0) {
                swapCols(pc, c);
                continue;
            }
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a[r][pc].get_mpz_t(), a[r][c].get_mpz_t());
            Integer ag = a[r][pc] / g;
            Integer bg = a[r][c] / g;
            combine(pc, c, x, y, ag, bg);
        }
        if (a[r][pc] != 0) {
            if (a[r][pc] < 0) {
                for (auto& row : a) row[pc] = -row[pc];
                for (auto& row : u) row[pc] = -row[pc];
                for (auto& x : uinv[pc]) x = -x;
            }
            pivotRows.push_back(r);
            ++pc;
        }
    }
    return {std::move(a), std::move(u), std::move(uinv), std::move(pivotRows), pc};
}

/// Row-style Hermite normal form of a lattice basis given as rows: upper
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped. Canonical for the lattice.
inline IntegerMatrix hermiteNormalForm(IntegerMatrix rows) {
    if (rows.empty()) return rows;
    std::size_t cols = rows.front().size();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows.size(); ++c) {
        for (std::size_t r = pr + 1; r < rows.size(); ++r) {
            while (rows[r][c] != 0) {
                if (rows[pr][c] == 0) {
                    std::swap(rows[pr], rows[r]);
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pr][c].get_mpz_t());
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[pr][k];
                if (rows[r][c] != 0) std::swap(rows[pr], rows[r]);
            }
        }
        if (rows[pr][c] == 0) continue;
        if (rows[pr][c] < 0)
            for (auto& x : rows[pr]) x = -x;
        for (std::size_t r = 0; r < pr; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pr][c].get_mpz_t());
            if (q != 0)
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= q * rows[pr][k];
        }
        ++pr;
    }
    rows.resize(pr);
    return rows;
}

/// Saturated basis (in Hermite normal form, as rows) of {x in Z^cols : A x = 0}.
inline IntegerMatrix integerKernel(const RationalMatrix& a, std::size_t cols) {
    ColumnEchelon ech = columnEchelon(clearDenominators(a), cols);
    IntegerMatrix basis;
    for (std::size_t c = ech.rank; c < cols; ++c) {
        IntegerVector v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = ech.u[i][c];
        basis.push_back(std::move(v));
    }
    return hermiteNormalForm(std::move(basis));
}

struct IntegerSolution {
    IntegerVector particular;
    IntegerMatrix kernel;  // HNF rows
};

/// All integer solutions of A x = b (A, b rational): particular + kernel lattice.
inline std::optional<IntegerSolution> solveInteger(const RationalMatrix& a, std::vector<Rational> b,
                                                   std::size_t cols) {
    IntegerMatrix ia = clearDenominators(a, &b);
    ColumnEchelon ech = columnEchelon(ia, cols);
    IntegerVector y(cols, 0);
    for (std::size_t k = 0; k < ech.rank; ++k) {
        std::size_t r = ech.pivotRows[k];
        Integer acc = b[r].get_num();
        for (std::size_t j = 0; j < k; ++j) acc -= ech.h[r][j] * y[j];
        if (acc % ech.h[r][k] != 0) return std::nullopt;
        y[k] = acc / ech.h[r][k];
    }
    for (std::size_t r = 0; r < ech.h.size(); ++r) {
        Integer acc = 0;
        for (std::size_t j = 0; j < ech.rank; ++j) acc += ech.h[r][j] * y[j];
        if (acc != b[r].get_num()) return std::nullopt;
    }
    IntegerVector x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < ech.rank; ++j) x[i] += ech.u[i][j] * y[j];
    IntegerMatrix basis;
    for (std::size_t c = ech.rank; c < cols; ++c) {
        IntegerVector v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = ech.u[i][c];
        basis.push_back(std::move(v));
    }
    return IntegerSolution{std::move(x), hermiteNormalForm(std::move(basis))};
}

}  // namespace tgwa::linalg
