#pragma once

// Higher spin 6-vertex configurations on the face lattice of a rank-two
// supported orbit, and the correspondence with orbital solutions.
//
// Doubled integer coordinates: face (a,b) is (2a,2b), the type-i edge
// sigma_i^{1/2} of that face is (2a+1,2b), the type-j edge is (2a,2b+1) and
// the vertex is (2a+1,2b+1). Keys are stored modulo 2*lattice, using the
// translate with 0 <= x < 2r for a lattice <(r,s)>, r >= 1 (0 <= y < 2s when
// r = 0).
//
// Conservation at a vertex (x,y):
//   M(x,y+1) + M(x+1,y) = M(x,y-1) + M(x-1,y)

#include "tgwa/orbital.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace tgwa {

using EdgeKey = std::pair<long, long>;
using EdgeMap = std::map<EdgeKey, unsigned>;

struct IndexPair {
    std::size_t first = 0;   // i, the x direction
    std::size_t second = 1;  // j, the y direction

    std::vector<std::size_t> asVector() const { return {first, second}; }
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct VertexConfig {
    ShiftSystem sys;
    OrbitId orbit;           // monic generator q0, indexSet {i, j}, stabilizer on {i, j}
    Rational generatorScale = 1;  // the supplied base-face polynomial is generatorScale * q0
    EdgeMap edges;

    IndexPair pair() const { return {orbit.indexSet.at(0), orbit.indexSet.at(1)}; }
    const StabilizerLattice& lattice() const { return orbit.stabilizer; }
    Poly baseFace() const { return orbit.generator * generatorScale; }
    bool empty() const { return edges.empty(); }
};

namespace detail {

inline long floorDiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

inline bool isTypeI(const EdgeKey& k) { return (k.first % 2 != 0) && (k.second % 2 == 0); }
inline bool isTypeJ(const EdgeKey& k) { return (k.first % 2 == 0) && (k.second % 2 != 0); }

/// Canonical representative of a doubled key modulo 2 * lattice.
inline EdgeKey canonicalKey(const StabilizerLattice& lat, EdgeKey key) {
    if (lat.rank() != 1) return key;
    long r = lat.basis[0][0], s = lat.basis[0][1];
    if (r != 0) {
        long q = detail::floorDiv(key.first, 2 * r);
        return {key.first - q * 2 * r, key.second - q * 2 * s};
    }
    long q = detail::floorDiv(key.second, 2 * s);
    return {key.first, key.second - q * 2 * s};
}

inline EdgeMap canonicalEdges(const StabilizerLattice& lat, const EdgeMap& edges) {
    EdgeMap out;
    for (const auto& [k, mult] : edges)
        if (mult > 0) out[canonicalKey(lat, k)] += mult;
    return out;
}

/// Builds a configuration on the orbit of `generator` (any nonzero scalar
/// multiple of a monic polynomial) with index pair (i, j), canonicalizing keys.
inline VertexConfig makeConfig(const ShiftSystem& sys, const Poly& generator, IndexPair pair, const EdgeMap& edges) {
    if (pair.first == pair.second) throw std::invalid_argument("index pair must have two distinct indices");
    auto [scale, monic] = makeMonic(generator);
    VertexConfig c;
    c.sys = sys;
    c.orbit = makeOrbitId(sys, monic, {pair.first, pair.second});
    c.generatorScale = scale;
    c.edges = canonicalEdges(c.orbit.stabilizer, edges);
    return c;
}

inline unsigned multiplicityAt(const VertexConfig& c, const EdgeKey& key) {
    auto it = c.edges.find(canonicalKey(c.lattice(), key));
    return it == c.edges.end() ? 0u : it->second;
}

inline CheckReport validate(const VertexConfig& c) {
    CheckReport report;
    const std::size_t m = c.sys.m();
    auto note = [&](const std::string& what) { report.fail("vertex-config", {}, Poly(m), what); };
    if (c.orbit.indexSet.size() != 2) {
        note("configuration needs an index pair");
        return report;
    }
    if (c.lattice().rank() > 1) note("stabilizer on the index pair has rank 2; the orbit is not rank-two supported");
    std::set<EdgeKey> vertices;
    for (const auto& [k, mult] : c.edges) {
        std::string where = "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
        if (mult == 0) note("zero multiplicity stored at " + where);
        if (!isTypeI(k) && !isTypeJ(k)) {
            note("key " + where + " is not an edge (x + y must be odd)");
            continue;
        }
        if (canonicalKey(c.lattice(), k) != k) note("key " + where + " is not canonical modulo the lattice");
        if (isTypeI(k)) {
            vertices.insert(canonicalKey(c.lattice(), {k.first, k.second - 1}));
            vertices.insert(canonicalKey(c.lattice(), {k.first, k.second + 1}));
        } else {
            vertices.insert(canonicalKey(c.lattice(), {k.first - 1, k.second}));
            vertices.insert(canonicalKey(c.lattice(), {k.first + 1, k.second}));
        }
    }
    for (const auto& v : vertices) {
        auto [x, y] = v;
        unsigned out = multiplicityAt(c, {x, y + 1}) + multiplicityAt(c, {x + 1, y});
        unsigned in = multiplicityAt(c, {x, y - 1}) + multiplicityAt(c, {x - 1, y});
        if (in != out) {
            report.fail("conservation", {}, Poly(m),
                        "vertex (" + std::to_string(x) + "," + std::to_string(y) + "): in " + std::to_string(in) +
                            " != out " + std::to_string(out));
        }
    }
    return report;
}

class InvalidConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The polynomial sitting on a doubled key: q0 shifted by (x/2) alpha_i + (y/2) alpha_j.
inline Poly polyAt(const VertexConfig& c, const EdgeKey& key) {
    IndexPair ij = c.pair();
    return shiftAlong(c.sys, {ij.first, ij.second}, {ratio(key.first, 2), ratio(key.second, 2)},
                      c.orbit.generator);
}

/// Configuration -> orbital solution: entry i is the product of its type-i
/// edges, entry j of its type-j edges, every other entry is 1.
inline OrbitalPiece decode(const VertexConfig& c) {
    CheckReport rep = validate(c);
    if (!rep.passed()) throw InvalidConfigError("cannot decode an invalid configuration: " + describe(rep.failures.front()));
    IndexPair ij = c.pair();
    OrbitalPiece piece;
    piece.orbit = makeOrbitId(c.sys, c.orbit.generator, allIndices(c.sys));
    piece.solution = FactoredSolution::ones(c.sys);
    for (const auto& [k, mult] : c.edges) {
        std::size_t entry = isTypeI(k) ? ij.first : ij.second;
        Poly f = polyAt(c, k);
        for (unsigned e = 0; e < mult; ++e) piece.solution.entries[entry].unit *= c.generatorScale;
        piece.solution.entries[entry].factors.emplace_back(std::move(f), mult);
    }
    return piece;
}

/// Orbital solution -> configuration, placing factor sigma_i^{1/2} (a,b).q0 of
/// entry i at (2a+1, 2b) and sigma_j^{1/2} (a,b).q0 of entry j at (2a, 2b+1).
inline VertexConfig encode(const OrbitalPiece& piece, const SameOrbitOptions& opts = {}) {
    auto pair = supportPair(piece);
    if (!pair) throw StructureError("piece is trivially supported; it has no vertex configuration");
    const auto& sys = piece.solution.sys;
    IndexPair ij{pair->first, pair->second};
    VertexConfig c;
    c.sys = sys;
    c.orbit = makeOrbitId(sys, piece.orbit.generator, ij.asVector());
    EdgeMap raw;
    for (std::size_t side = 0; side < 2; ++side) {
        std::size_t entry = side == 0 ? ij.first : ij.second;
        for (const auto& [g, mult] : piece.solution.entries[entry].factors) {
            Poly q = halfShift(sys, entry, -1, g);
            OrbitMatch match = sameOrbit(sys, c.orbit.generator, q, ij.asVector(), c.orbit.stabilizer, opts);
            if (match.verdict == OrbitVerdict::Undecided)
                throw OrbitDecisionError("could not locate factor " + toString(g) + " in the orbit");
            if (!match.found()) throw StructureError("factor " + toString(g) + " is off the orbit");
            long a = match.shift[0], b = match.shift[1];
            EdgeKey key = side == 0 ? EdgeKey{2 * a + 1, 2 * b} : EdgeKey{2 * a, 2 * b + 1};
            raw[key] += mult;
        }
    }
    c.edges = canonicalEdges(c.lattice(), raw);
    CheckReport rep = validate(c);
    if (!rep.passed())
        throw StructureError("encoded configuration violates conservation (input is not a solution): " +
                             describe(rep.failures.front()));
    return c;
}

/// Translates every key by (dx, dy) (doubled units), re-canonicalizing.
inline VertexConfig translated(const VertexConfig& c, long dx, long dy) {
    VertexConfig out = c;
    EdgeMap moved;
    for (const auto& [k, mult] : c.edges) moved[{k.first + dx, k.second + dy}] += mult;
    out.edges = canonicalEdges(c.lattice(), moved);
    return out;
}

/// Pointwise sum of two configurations on the same orbit anchor.
inline VertexConfig operator+(const VertexConfig& a, const VertexConfig& b) {
    if (a.orbit.generator != b.orbit.generator || !(a.pair() == b.pair()))
        throw std::invalid_argument("configurations live on different orbit anchors");
    VertexConfig out = a;
    for (const auto& [k, mult] : b.edges) out.edges[k] += mult;
    return out;
}

/// Equality after aligning the two orbit anchors: if b's generator is
/// (ka, kb).q0_a then b's face (x, y) is a's face (x + ka, y + kb).
inline bool equivalentConfigs(const VertexConfig& a, const VertexConfig& b, const SameOrbitOptions& opts = {}) {
    if (!(a.sys == b.sys) || !(a.pair() == b.pair())) return false;
    OrbitMatch match =
        sameOrbit(a.sys, a.orbit.generator, b.orbit.generator, a.pair().asVector(), a.orbit.stabilizer, opts);
    if (!match.found()) return false;
    EdgeMap moved;
    for (const auto& [k, mult] : b.edges) moved[{k.first + 2 * match.shift[0], k.second + 2 * match.shift[1]}] += mult;
    return canonicalEdges(a.lattice(), moved) == a.edges;
}

struct ClassificationEntry {
    OrbitId orbit;  // over all n indices
    IndexPair pair;
    VertexConfig config;
};

struct ClassificationRecord {
    std::vector<ClassificationEntry> entries;
};

/// Monic factored solution -> list of (orbit, index pair, configuration).
inline ClassificationRecord classify(const FactoredSolution& p, const SameOrbitOptions& opts = {}) {
    ClassificationRecord record;
    for (auto& piece : decompose(p, opts)) {
        auto pair = supportPair(piece);
        if (!pair)
            throw StructureError("orbital piece on the orbit of " + toString(piece.orbit.generator) +
                                 " is not rank-two supported; a genuine solution has two active indices per orbit");
        VertexConfig config = encode(piece, opts);
        record.entries.push_back({piece.orbit, config.pair(), std::move(config)});
    }
    // The record must multiply back to the input.
    SolutionTuple rebuilt = SolutionTuple::ones(p.sys);
    for (const auto& e : record.entries) {
        OrbitalPiece back = decode(e.config);
        for (std::size_t i = 0; i < p.sys.n(); ++i) rebuilt.polys[i] *= back.solution.entries[i].expand(p.sys.m());
    }
    if (rebuilt.polys != p.expand().polys) throw std::logic_error("classification does not reproduce the input");
    return record;
}

/// Superposition of `loops` monotone staircase loops on the cylinder
/// Z^2 / <(r,s)>: each loop takes r steps in direction i and s in direction
/// j in a uniformly random order, starting from a random vertex.
inline VertexConfig randomConfig(const ShiftSystem& sys, const OrbitId& orbit, unsigned loops, std::uint64_t seed) {
    if (orbit.indexSet.size() != 2) throw std::invalid_argument("randomConfig needs an orbit over an index pair");
    const auto& lat = orbit.stabilizer;
    if (lat.rank() != 1 || lat.basis[0][0] < 1 || lat.basis[0][1] < 1)
        throw std::invalid_argument("randomConfig needs a rank-1 stabilizer <(r,s)> with r, s >= 1");
    const long r = lat.basis[0][0], s = lat.basis[0][1];
    std::mt19937_64 rng(seed);
    auto below = [&](std::uint64_t bound) { return static_cast<long>(rng() % bound); };

    VertexConfig c;
    c.sys = sys;
    c.orbit = orbit;
    EdgeMap raw;
    for (unsigned loop = 0; loop < loops; ++loop) {
        std::vector<int> steps(static_cast<std::size_t>(r), 0);
        steps.insert(steps.end(), static_cast<std::size_t>(s), 1);
        for (std::size_t k = steps.size(); k > 1; --k) std::swap(steps[k - 1], steps[static_cast<std::size_t>(below(k))]);
        long x = 2 * below(static_cast<std::uint64_t>(r)) + 1;
        long y = 2 * below(static_cast<std::uint64_t>(std::max(r, s))) + 1;
        for (int step : steps) {
            if (step == 0) {
                raw[{x + 1, y}] += 1;  // horizontal segment: a type-j edge
                x += 2;
            } else {
                raw[{x, y + 1}] += 1;  // vertical segment: a type-i edge
                y += 2;
            }
        }
    }
    c.edges = canonicalEdges(lat, raw);
    return c;
}

}  // namespace tgwa
