// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "oracles.hpp"
#include "tgwa/equivalence.hpp"
#include "tgwa/factorize.hpp"
#include "tgwa/multiquiver.hpp"
#include "tgwa/parse.hpp"
#include "tgwa/problem_file.hpp"
#include "tgwa/svg.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace tgwa;

namespace {

const std::string kData = TGWA_DATA_DIR;
const std::string kGolden = TGWA_GOLDEN_DIR;

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

ShiftSystem cubicSystem() { return ShiftSystem::fromRows({{2, -3, 0, 0}, {4, -5, 1, -3}, {-2, 2, -1, 3}}); }
Poly cubic() { return parsePoly("(u2+u3)^2 - (u1^3 - u1 + 1)", 3); }
ShiftSystem gl3() { return ShiftSystem::fromRows({{-1, 1, 0}, {0, -1, 1}}); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Shift of f by a hand-written vector, for the cubic-orbit expectations.
Poly fAt(Rational a, Rational b, Rational c) { return shift(cubic(), std::vector<Rational>{a, b, c}); }

Outcome criterion1() {
    Outcome o;
    ProblemFile pf = loadProblemFile(kData + "/cubic.json");
    const VertexConfig& c = pf.config("staircase").config;
    o.require(validate(c).passed(), "staircase configuration does not validate");
    SolutionTuple t = decode(c).solution.expand();
    // p1 = sigma_1^{1/2}(f) sigma_1^{3/2} sigma_2(f): the middle line substitutes
    // u - (1,2,-1) and u - (0,1,-1).
    Poly p1 = fAt(1, 2, -1) * fAt(0, 1, -1);
    Poly p1Middle = parsePoly("((u2+u3-1)^2 - ((u1-1)^3 - u1 + 2)) * ((u2+u3)^2 - (u1^3 - u1 + 1))", 3);
    // p2 = sigma_1 sigma_2^{1/2}(f) sigma_1^2 sigma_2^{3/2}(f) sigma_1^3 sigma_2^{3/2}(f).
    Poly p2 = fAt(Rational(1, 2), Rational(3, 2), -1) * fAt(Rational(-1, 2), Rational(1, 2), -1) *
              fAt(Rational(3, 2), Rational(9, 2), -3);
    o.require(p1 == p1Middle, "p1 sigma product disagrees with its substitution line");
    o.require(t.polys[0] == p1, "decoded p1 differs from the sigma product");
    o.require(t.polys[1] == p2, "decoded p2 differs from the sigma product");
    o.require(t.polys[2].isOne() && t.polys[3].isOne(), "p3 or p4 is not 1");
    o.require(checkBinary(t).passed() && checkTernary(t).passed(), "decoded tuple fails verify");
    o.require(pf.tuple("p").tuple().polys == t.polys, "problem-file tuple differs from decode");
    // Hand-expanded factors with shifted constants do not form a solution.
    SolutionTuple variant(cubicSystem(),
                          {parsePoly("((u2+u3-1)^2-((u1-1)^3-u1+2))*((u2+u3-1)^2-((u1+1)^3-u1))", 3),
                           parsePoly("((u2+u3+3/2)^2-((u1+3/2)^3-u1-1/2))*((u2+u3+1/2)^2-((u1+1/2)^3-u1-3/2))"
                                     "*((u2+u3-5/2)^2-((u1-5/2)^3-u1+5/2))",
                                     3),
                           Poly::one(3), Poly::one(3)});
    o.require(!checkBinary(variant).passed(), "hand-expanded variant unexpectedly passes");
    if (o.ok) o.note = "decode = sigma-product definitions; hand-expanded variant rejected";
    return o;
}

Outcome criterion2() {
    Outcome o;
    ProblemFile pf = loadProblemFile(kData + "/cubic.json");
    const VertexConfig& c = pf.config("staircase").config;
    VertexConfig back = encode(decode(c));
    o.require(equivalentConfigs(c, back), "encode(decode(config)) differs after re-anchoring");
    o.require(toString(stabilizerLattice(cubicSystem(), cubic(), {0, 1})) == "<(3,2)>", "stabilizer on {1,2}");
    o.require(stabilizerLattice(cubicSystem(), cubic(), {2, 3}).isFull(), "stabilizer on {3,4} is not Z^2");
    o.require(znAction(cubicSystem(), IntVector{3, 2, 0, 0}, cubic()) == cubic(), "sigma_1^3 sigma_2^2 f != f");
    return o;
}

Outcome criterion3() {
    Outcome o;
    SolutionTuple t = buildSolution({{-1, 1, 0}, {0, -1, 1}});
    o.require(t.polys == std::vector<Poly>{parsePoly("u1 - 1", 2), parsePoly("u1*(u2 - 1)", 2), parsePoly("u2", 2)},
              "buildSolution output");
    o.require(checkNonSymmetric(t).passed(), "non-symmetric check");
    SolutionTuple s = symmetrize(t);
    o.require(checkBinary(s).passed() && checkTernary(s).passed(), "symmetrized check");
    auto pieces = decompose(factorTuple(s).monicPart());
    o.require(pieces.size() == 2, "piece count");
    if (pieces.size() == 2) {
        o.require(supportPair(pieces[0]) == std::make_pair<std::size_t, std::size_t>(0, 1), "first support pair");
        o.require(supportPair(pieces[1]) == std::make_pair<std::size_t, std::size_t>(1, 2), "second support pair");
    }
    SolutionTuple variant(gl3(), {parsePoly("u1 - 1/2", 2), parsePoly("(u1 + 1/2)*(u2 - 1/2)", 2),
                                  parsePoly("u2 + 1/2", 2)});
    CheckReport rep = checkBinary(variant);
    bool witness = false;
    for (const auto& f : rep.failures)
        witness = witness || (f.indices == std::vector<std::size_t>{0, 1} && !f.difference.isZero());
    o.require(!rep.passed() && witness, "offset tuple has no nonzero witness for pair (1,2)");
    return o;
}

// Random shift systems whose stabilizer on a chosen pair is <(r,s)>: each
// functional L the generator depends on takes values s*c, -r*c on the pair
// and 0 on the other columns.
struct Embedded {
    ShiftSystem sys;
    OrbitId orbit;
};

long pick(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::pair<long, long> coprimePair(std::mt19937_64& rng) {
    for (;;) {
        long r = pick(rng, 1, 3), s = pick(rng, 1, 3);
        if (std::gcd(r, s) == 1) return {r, s};
    }
}

Embedded randomEmbedding(std::mt19937_64& rng) {
    std::size_t n = static_cast<std::size_t>(pick(rng, 3, 4));
    std::size_t i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    if (j < i) std::swap(i, j);
    auto [r, s] = coprimePair(rng);
    long kind = pick(rng, 0, 2);
    std::size_t m = kind == 2 ? 3 : static_cast<std::size_t>(pick(rng, 1, 3));
    std::vector<RationalVector> cols(n, RationalVector(m, 0));
    Poly gen(m);
    if (kind == 2) {
        // f depends on t1 and t2 + t3.
        long c1 = pick(rng, 1, 2) * (pick(rng, 0, 1) ? 1 : -1), c2 = pick(rng, -2, 2);
        for (std::size_t k = 0; k < n; ++k) {
            long d = pick(rng, -3, 3);
            long l1 = k == i ? s * c1 : k == j ? -r * c1 : 0;
            long l2 = k == i ? s * c2 : k == j ? -r * c2 : 0;
            cols[k] = {l1, d, l2 - d};
        }
        gen = -cubic();
    } else {
        std::size_t v = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(m) - 1));
        long c = pick(rng, 1, 2) * (pick(rng, 0, 1) ? 1 : -1);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t row = 0; row < m; ++row)
                cols[k][row] = row == v ? Rational(k == i ? s * c : k == j ? -r * c : 0) : Rational(pick(rng, -3, 3));
        Poly u = Poly::variable(m, v);
        gen = kind == 0 ? u : u * u;
    }
    ShiftSystem sys = ShiftSystem::fromColumns(cols);
    return {sys, makeOrbitId(sys, gen, {i, j})};
}

// Independent of the factored check: both sides of every binary relation
// evaluated factor by factor at random points.
bool binaryHoldsAtPoints(const FactoredSolution& f, std::mt19937_64& rng) {
    const auto& sys = f.sys;
    auto side = [&](std::size_t a, std::size_t b, const Rational& sign, const std::vector<Rational>& pt) {
        Rational v = f.entries[a].unit * f.entries[b].unit;
        auto term = [&](std::size_t e, std::size_t other) {
            std::vector<Rational> t(sys.m());
            for (std::size_t k = 0; k < sys.m(); ++k) t[k] = sign * sys.column(other)[k] / 2;
            for (const auto& [g, mult] : f.entries[e].factors)
                for (unsigned r = 0; r < mult; ++r) v *= oracle::evalShifted(g, t, pt);
        };
        term(a, b);
        term(b, a);
        return v;
    };
    for (int trial = 0; trial < 3; ++trial) {
        auto pt = oracle::randomPoint(rng, sys.m());
        for (std::size_t i = 0; i < sys.n(); ++i)
            for (std::size_t j = i + 1; j < sys.n(); ++j)
                if (side(i, j, 1, pt) != side(i, j, -1, pt)) return false;
    }
    return true;
}

Outcome criterion4() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    int instances = 0;
    try {
        for (; instances < 240; ++instances) {
            Embedded e = randomEmbedding(rng);
            o.require(e.orbit.stabilizer.rank() == 1, "constructed stabilizer is not rank 1");
            unsigned loops = static_cast<unsigned>(pick(rng, 1, 4));
            VertexConfig c = randomConfig(e.sys, e.orbit, loops, rng());
            o.require(validate(c).passed(), "random configuration invalid");
            FactoredSolution f = decode(c).solution;
            o.require(checkBinary(f).passed(), "decoded tuple fails binary");
            o.require(checkTernary(f).passed(), "decoded tuple fails ternary");
            o.require(binaryHoldsAtPoints(f, rng), "binary relation fails at a random point");
            if (loops == 1 && e.orbit.generator.totalDegree() <= 2) {
                SolutionTuple t = f.expand();
                o.require(checkBinary(t).passed() && checkTernary(t).passed(), "expanded check disagrees");
            }
        }
    } catch (const std::exception& ex) {
        o.require(false, std::string("exception: ") + ex.what());
    }
    o.require(instances >= 200, "fewer than 200 instances");
    if (o.ok) o.note = std::to_string(instances) + " instances";
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::mt19937_64 rng(5150);
    int fixedCases = 0, movedCases = 0;
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t m = static_cast<std::size_t>(pick(rng, 1, 3));
        // q = g(L(u), u_rest): fixed by shifts in ker L when q ignores the rest.
        std::vector<Rational> l(m);
        for (auto& x : l) x = pick(rng, -3, 3);
        Poly lin(m);
        for (std::size_t k = 0; k < m; ++k) lin += Poly::variable(m, k) * l[k];
        Poly q = lin.pow(static_cast<unsigned>(pick(rng, 1, 3))) + lin * Rational(pick(rng, -4, 4)) +
                 Poly::constant(m, pick(rng, -5, 5));
        if (pick(rng, 0, 2) == 0) q += Poly::variable(m, static_cast<std::size_t>(pick(rng, 0, static_cast<long>(m) - 1)));
        std::vector<Rational> beta(m);
        for (auto& x : beta) x = Rational(pick(rng, -4, 4)) / pick(rng, 1, 2);
        if (trial % 2 == 0 && m >= 2) {
            // Force beta into ker L when possible.
            std::size_t a = 0;
            while (a < m && l[a] == 0) ++a;
            if (a < m) {
                Rational sum = 0;
                for (std::size_t k = 0; k < m; ++k)
                    if (k != a) sum += l[k] * beta[k];
                beta[a] = -sum / l[a];
            }
        }
        bool byGradient = isFixedByShift(q, beta);
        std::vector<Rational> seven = beta;
        for (auto& x : seven) x *= 7;
        bool direct = shift(q, beta) == q && shift(q, seven) == q;
        bool pointwise = oracle::fixedByDirectComparison(q, beta, rng());
        std::string betaText;
        for (const auto& x : beta) betaText += toString(x) + " ";
        o.require(byGradient == direct && direct == pointwise,
                  "gradient criterion disagrees with direct shift for q = " + toString(q) + ", beta = " + betaText);
        (direct ? fixedCases : movedCases)++;
    }
    o.require(fixedCases >= 10 && movedCases >= 10, "corpus lacks fixed or non-fixed cases");
    if (o.ok) o.note = std::to_string(fixedCases) + " fixed, " + std::to_string(movedCases) + " moved";
    return o;
}

// Product of 2-3 orbital pieces on distinct orbits over one shift system.
struct Corpus {
    FactoredSolution product;
    std::size_t pieces = 0;
};

Corpus randomProduct(std::mt19937_64& rng) {
    const std::size_t m = 3, n = 4;
    const long family = pick(rng, 0, 1);
    std::vector<RationalVector> cols(n, RationalVector(m, 0));
    struct Plan {
        Poly gen;
        std::size_t i, j;
    };
    std::vector<Plan> plans;
    auto rowFor = [&](std::size_t v, std::size_t i, std::size_t j) {
        auto [r, s] = coprimePair(rng);
        long c = pick(rng, 1, 2);
        for (std::size_t k = 0; k < n; ++k) cols[k][v] = k == i ? s * c : k == j ? -r * c : 0;
    };
    const Rational thirds[] = {0, Rational(1, 3), Rational(2, 3)};
    std::size_t count = static_cast<std::size_t>(pick(rng, 2, 3));
    if (family == 0) {
        // Pieces on u_v + c or (u_v + c)^2 + 1, each variable on its own pair.
        std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 2}};
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (std::size_t v = 0; v < m; ++v) rowFor(v, pairs[v].first, pairs[v].second);
        std::vector<std::tuple<std::size_t, int, int>> used;
        while (plans.size() < count) {
            std::size_t v = static_cast<std::size_t>(pick(rng, 0, 2));
            int shape = static_cast<int>(pick(rng, 0, 1)), third = static_cast<int>(pick(rng, 0, 2));
            if (std::find(used.begin(), used.end(), std::make_tuple(v, shape, third)) != used.end()) continue;
            used.emplace_back(v, shape, third);
            Poly lin = Poly::variable(m, v) + Poly::constant(m, thirds[third]);
            plans.push_back({shape == 0 ? lin : lin * lin + Poly::one(m), pairs[v].first, pairs[v].second});
        }
    } else {
        // The cubic on pair (1,2) together with pieces on u1 + c, c = 1/3, 2/3.
        cols[0] = {2, 4, -2};
        cols[1] = {-3, -5, 2};
        cols[2] = {0, 1, -1};
        cols[3] = {0, -3, 3};
        plans.push_back({-cubic(), 0, 1});
        for (std::size_t k = 1; k < count; ++k)
            plans.push_back({Poly::variable(m, 0) + Poly::constant(m, thirds[k]), 0, 1});
    }
    ShiftSystem sys = ShiftSystem::fromColumns(cols);
    Corpus out{FactoredSolution::ones(sys), plans.size()};
    for (const auto& p : plans) {
        OrbitId orbit = makeOrbitId(sys, p.gen, {p.i, p.j});
        VertexConfig c = randomConfig(sys, orbit, static_cast<unsigned>(pick(rng, 1, 3)), rng());
        OrbitalPiece piece = decode(c);
        for (std::size_t e = 0; e < n; ++e)
            for (const auto& [g, mult] : piece.solution.entries[e].factors) out.product.entries[e].multiplyBy(g, mult);
    }
    return out;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937_64 rng(6060);
    int solutions = 0;
    try {
        for (; solutions < 40; ++solutions) {
            Corpus c = randomProduct(rng);
            SolutionTuple input = c.product.expand();
            o.require(checkSymmetric(c.product).passed(), "corpus product is not a solution");
            auto pieces = decompose(c.product.monicPart());
            o.require(pieces.size() == c.pieces, "piece count differs");
            o.require(multiplyPieces(input.sys, pieces).polys == input.polys, "pieces do not reconstruct the input");
            for (const auto& p : pieces) o.require(verifyOrbital(p).passed(), "piece fails verifyOrbital");
            for (std::size_t a = 0; a < pieces.size(); ++a)
                for (std::size_t b = a + 1; b < pieces.size(); ++b)
                    o.require(sameOrbit(input.sys, pieces[a].orbit.generator, pieces[b].orbit.generator,
                                        allIndices(input.sys))
                                      .verdict == OrbitVerdict::NotInOrbit,
                              "two pieces share an orbit");
        }
    } catch (const std::exception& ex) {
        o.require(false, std::string("exception: ") + ex.what());
    }
    if (o.ok) o.note = std::to_string(solutions) + " solutions";
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::mt19937_64 rng(7007);
    int trials = 0;
    long productDisagrees = 0;
    for (; trials < 60; ++trials) {
        std::size_t m = static_cast<std::size_t>(pick(rng, 1, 4)), n = static_cast<std::size_t>(pick(rng, 2, 4));
        BetaMatrix beta(m, std::vector<long>(n, 0));
        for (auto& row : beta) {
            std::size_t a = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
            std::size_t b = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 2));
            if (b >= a) ++b;
            row[a] = pick(rng, 1, 6);
            row[b] = -pick(rng, 1, 6);
        }
        auto pieces = decompose(symmetrizedFactors(beta));
        long sum = 0, product = 1;
        for (std::size_t j = 0; j < m; ++j) {
            long gamma = rowGcd(beta[j]);
            sum += gamma;
            product *= gamma;
            long inRow = 0;
            for (const auto& p : pieces) inRow += p.orbit.generator.degreeIn(j) > 0 ? 1 : 0;
            o.require(inRow == gamma, "per-row piece count differs from the row gcd");
        }
        o.require(static_cast<long>(pieces.size()) == sum, "total piece count differs from the sum of row gcds");
        productDisagrees += static_cast<long>(pieces.size()) != product ? 1 : 0;
        auto residue = factorByResidue(beta);
        o.require(residue.size() == pieces.size(), "factorByResidue count differs from decompose");
        const ShiftSystem& sys = pieces.front().solution.sys;
        for (const auto& r : residue) {
            int hits = 0;
            for (const auto& p : pieces)
                if (sameOrbit(sys, r.piece.orbit.generator, p.orbit.generator, allIndices(sys)).found()) {
                    ++hits;
                    o.require(r.piece.solution.expand().polys == p.solution.expand().polys,
                              "residue piece differs from the decompose piece on its orbit");
                }
            o.require(hits == 1, "residue piece does not match exactly one decompose piece");
        }
    }
    if (o.ok)
        o.note = std::to_string(trials) + " matrices; per-row count = gcd, total = sum of gcds (product differs in " +
                 std::to_string(productDisagrees) + ")";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8080);
    auto randomG = [&](std::size_t m) {
        for (;;) {
            linalg::RationalMatrix g(m, std::vector<Rational>(m));
            for (auto& row : g)
                for (auto& x : row) x = Rational(pick(rng, -3, 3)) / pick(rng, 1, 2);
            if (linalg::inverse(g)) return g;
        }
    };
    int pairs = 0;
    for (; pairs < 30; ++pairs) {
        FactoredSolution pair;
        if (pairs % 2 == 0) {
            Embedded e = randomEmbedding(rng);
            pair = decode(randomConfig(e.sys, e.orbit, static_cast<unsigned>(pick(rng, 1, 2)), rng())).solution;
        } else {
            BetaMatrix beta{{pick(rng, 1, 4), -pick(rng, 1, 4), 0}, {0, pick(rng, 1, 3), -pick(rng, 1, 3)}};
            pair = symmetrizedFactors(beta);
        }
        const std::size_t m = pair.sys.m();
        FactoredSolution broken = pair;
        broken.entries[0].multiplyBy(Poly::variable(m, 0) + Poly::constant(m, Rational(1, 7)), 1);
        auto g = randomG(m), h = randomG(m);
        FactoredSolution moved = applyLinear(g, pair);
        o.require(checkSymmetric(moved).passed() == checkSymmetric(pair).passed(), "verdict changed");
        o.require(checkBinary(applyLinear(g, broken)).passed() == checkBinary(broken).passed(),
                  "binary verdict changed on a non-solution");
        SolutionTuple expandedMoved = applyLinear(g, pair.expand());
        o.require(expandedMoved.polys == moved.expand().polys, "factorwise and expanded actions differ");
        o.require(checkEquivalence(psiFromLinear(g), pair.expand(), expandedMoved).passed(),
                  "psi_g does not witness equivalence");
        FactoredSolution gh = applyLinear(g, applyLinear(h, pair));
        FactoredSolution direct = applyLinear(linalg::multiply(g, h), pair);
        bool same = gh.sys == direct.sys;
        for (std::size_t i = 0; i < gh.entries.size(); ++i)
            same = same && sameFactorization(gh.entries[i], direct.entries[i]);
        o.require(same, "group law fails");
    }
    if (o.ok) o.note = std::to_string(pairs) + " pairs";
    return o;
}

Outcome criterion9() {
    Outcome o;
    ProblemFile pf = loadProblemFile(kData + "/cubic.json");
    std::string svg = renderSvg(pf.config("staircase").config);
    std::string golden = slurp(kGolden + "/cubic.svg");
    o.require(!golden.empty(), "golden file missing");
    o.require(svg == golden, "SVG differs from the golden file");
    auto count = [&](const std::string& needle) {
        std::size_t c = 0;
        for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++c;
        return c;
    };
    o.require(count("stroke-dasharray") == 1, "dashed boundary group missing");
    o.require(count("stroke-width=\"4\"") == 5, "expected five highlighted edges");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        double budgetSeconds;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "cubic staircase decode and verify", 1.0, criterion1},
        {2, "cubic staircase round trip and stabilizers", 1.0, criterion2},
        {3, "gl3 pipeline and offset-tuple witness", 1.0, criterion3},
        {4, "decoded random configurations satisfy binary and ternary", 60.0, criterion4},
        {5, "gradient criterion agrees with direct shifts", 5.0, criterion5},
        {6, "orbital factorization of multi-orbit products", 30.0, criterion6},
        {7, "multiquiver orbit counting and residue factorization", 30.0, criterion7},
        {8, "GL action and equivalence", 10.0, criterion8},
        {9, "SVG golden file", 1.0, criterion9},
    };
    bool allOk = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budgetSeconds) {
            o.ok = false;
            o.note += " (over time budget)";
        }
        allOk = allOk && o.ok;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << " - " << c.title << " [" << secs << "s / "
             << c.budgetSeconds << "s]";
        if (!o.note.empty()) line << " - " << o.note;
        std::cout << line.str() << std::endl;
    }
    return allOk ? 0 : 1;
}
