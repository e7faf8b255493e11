#pragma once

// JSON problem files. Polynomials are expression strings, rationals are
// strings "a" or "a/b" (plain JSON integers are accepted on input).
//
// {
//   "m": 3, "n": 4,
//   "alpha": [["2", "-3", "0", "0"], ...],            m rows of length n
//   "beta": [[-1, 1, 0], [0, -1, 1]],                 optional
//   "tuples": {
//     "t":  ["u1 - 1", "u1*(u2 - 1)", "u2"],
//     "q":  {"alpha": [...], "polys": [...]},          own shift matrix
//     "f":  {"factored": [[["u1 - 1/2", 1]], [], ...]} entries as [expr, mult] lists
//   },
//   "configs": {
//     "fig": {"generator": "...", "pair": [1, 2], "lattice": [[3, 2]],
//             "edges": [[1, 0, 1], [2, 1, 1]]}
//   },
//   "psi": {"forward": [...], "inverse": [...]}
// }

#include "tgwa/equivalence.hpp"
#include "tgwa/multiquiver.hpp"
#include "tgwa/parse.hpp"
#include "tgwa/vertex_config.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tgwa {

using Json = nlohmann::ordered_json;

class ProblemFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TupleEntry {
    std::string name;
    std::optional<SolutionTuple> plain;
    std::optional<FactoredSolution> factored;

    SolutionTuple tuple() const { return plain ? *plain : factored->expand(); }
    const ShiftSystem& sys() const { return plain ? plain->sys : factored->sys; }
};

struct ConfigEntry {
    std::string name;
    VertexConfig config;
};

struct ProblemFile {
    std::optional<ShiftSystem> sys;
    std::optional<BetaMatrix> beta;
    std::vector<TupleEntry> tuples;
    std::vector<ConfigEntry> configs;
    std::optional<AutomorphismSpec> psi;

    const TupleEntry& tuple(const std::string& name) const {
        for (const auto& t : tuples)
            if (t.name == name) return t;
        throw ProblemFileError("no tuple named '" + name + "'");
    }
    const ConfigEntry& config(const std::string& name) const {
        for (const auto& c : configs)
            if (c.name == name) return c;
        throw ProblemFileError("no configuration named '" + name + "'");
    }
    const ShiftSystem& system() const {
        if (!sys) throw ProblemFileError("problem file has no alpha");
        return *sys;
    }
};

namespace detail {

inline Rational jsonRational(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parseRational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ProblemFileError(where + ": " + e.what());
        }
    }
    throw ProblemFileError(where + ": expected a rational string or an integer");
}

inline long jsonInteger(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return j.get<long>();
    Rational r = jsonRational(j, where);
    if (!isInteger(r)) throw ProblemFileError(where + ": expected an integer");
    return toLong(r.get_num());
}

inline const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ProblemFileError(where + ": missing '" + key + "'");
    return j.at(key);
}

inline ShiftSystem jsonSystem(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ProblemFileError(where + ": alpha must be a non-empty array of rows");
    std::vector<RationalVector> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array()) throw ProblemFileError(where + ": alpha row " + std::to_string(r + 1) + " is not an array");
        RationalVector row;
        for (const auto& x : j[r]) row.push_back(jsonRational(x, where));
        rows.push_back(std::move(row));
    }
    try {
        return ShiftSystem::fromRows(rows);
    } catch (const std::exception& e) {
        throw ProblemFileError(where + ": " + e.what());
    }
}

inline Poly jsonPoly(const Json& j, std::size_t m, const std::string& where) {
    if (!j.is_string()) throw ProblemFileError(where + ": polynomial must be an expression string");
    try {
        return parsePoly(j.get<std::string>(), m);
    } catch (const ParseError& e) {
        throw ProblemFileError(where + ": " + e.what() + " in \"" + j.get<std::string>() + "\"");
    }
}

inline FactoredPoly jsonFactoredEntry(const Json& j, std::size_t m, const std::string& where) {
    Rational unit = 1;
    const Json* factors = &j;
    if (j.is_object()) {
        if (j.contains("unit")) unit = jsonRational(j.at("unit"), where);
        factors = &member(j, "factors", where);
    }
    if (!factors->is_array()) throw ProblemFileError(where + ": factored entry must be a list of [expr, mult]");
    std::vector<std::pair<Poly, unsigned>> raw;
    for (const auto& f : *factors) {
        if (f.is_string()) {
            raw.emplace_back(jsonPoly(f, m, where), 1);
            continue;
        }
        if (!f.is_array() || f.size() != 2) throw ProblemFileError(where + ": factor must be [expr, multiplicity]");
        long mult = jsonInteger(f[1], where);
        if (mult < 1) throw ProblemFileError(where + ": multiplicity must be positive");
        raw.emplace_back(jsonPoly(f[0], m, where), static_cast<unsigned>(mult));
    }
    try {
        return FactoredPoly::from(unit, raw);
    } catch (const std::exception& e) {
        throw ProblemFileError(where + ": " + e.what());
    }
}

inline TupleEntry jsonTuple(const std::string& name, const Json& j, const std::optional<ShiftSystem>& global) {
    const std::string where = "tuple '" + name + "'";
    std::optional<ShiftSystem> sys = global;
    const Json* body = &j;
    if (j.is_object()) {
        if (j.contains("alpha")) sys = jsonSystem(j.at("alpha"), where);
        if (j.contains("polys")) body = &j.at("polys");
        else if (j.contains("factored")) body = nullptr;
        else throw ProblemFileError(where + ": expected 'polys' or 'factored'");
    }
    if (!sys) throw ProblemFileError(where + ": no alpha available");
    TupleEntry entry;
    entry.name = name;
    const std::size_t m = sys->m();
    if (body) {
        if (!body->is_array()) throw ProblemFileError(where + ": polynomials must be a list");
        std::vector<Poly> polys;
        for (std::size_t i = 0; i < body->size(); ++i)
            polys.push_back(jsonPoly((*body)[i], m, where + " entry " + std::to_string(i + 1)));
        try {
            entry.plain = SolutionTuple(*sys, std::move(polys));
        } catch (const std::exception& e) {
            throw ProblemFileError(where + ": " + e.what());
        }
    } else {
        const Json& f = j.at("factored");
        if (!f.is_array() || f.size() != sys->n())
            throw ProblemFileError(where + ": factored form needs one entry per index");
        FactoredSolution fs{*sys, {}};
        for (std::size_t i = 0; i < f.size(); ++i)
            fs.entries.push_back(jsonFactoredEntry(f[i], m, where + " entry " + std::to_string(i + 1)));
        entry.factored = std::move(fs);
    }
    return entry;
}

inline ConfigEntry jsonConfig(const std::string& name, const Json& j, const std::optional<ShiftSystem>& global) {
    const std::string where = "config '" + name + "'";
    std::optional<ShiftSystem> sys = global;
    if (j.is_object() && j.contains("alpha")) sys = jsonSystem(j.at("alpha"), where);
    if (!sys) throw ProblemFileError(where + ": no alpha available");
    Poly gen = jsonPoly(member(j, "generator", where), sys->m(), where + " generator");
    const Json& pj = member(j, "pair", where);
    if (!pj.is_array() || pj.size() != 2) throw ProblemFileError(where + ": pair must be [i, j]");
    long i = jsonInteger(pj[0], where), k = jsonInteger(pj[1], where);
    if (i < 1 || k < 1 || static_cast<std::size_t>(i) > sys->n() || static_cast<std::size_t>(k) > sys->n() || i == k)
        throw ProblemFileError(where + ": pair indices must be distinct and in 1..n");
    EdgeMap edges;
    const Json& ej = member(j, "edges", where);
    if (!ej.is_array()) throw ProblemFileError(where + ": edges must be a list of [x, y, multiplicity]");
    for (const auto& e : ej) {
        if (!e.is_array() || e.size() != 3) throw ProblemFileError(where + ": edge must be [x, y, multiplicity]");
        long mult = jsonInteger(e[2], where);
        if (mult < 0) throw ProblemFileError(where + ": negative multiplicity");
        edges[{jsonInteger(e[0], where), jsonInteger(e[1], where)}] += static_cast<unsigned>(mult);
    }
    ConfigEntry out;
    out.name = name;
    try {
        out.config = makeConfig(*sys, gen, {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)}, edges);
    } catch (const std::exception& e) {
        throw ProblemFileError(where + ": " + e.what());
    }
    if (j.contains("lattice")) {
        const Json& lj = j.at("lattice");
        if (!lj.is_array()) throw ProblemFileError(where + ": lattice must be a list of basis rows");
        linalg::IntegerMatrix basis;
        for (const auto& row : lj) {
            if (!row.is_array() || row.size() != 2) throw ProblemFileError(where + ": lattice rows must have length 2");
            basis.push_back({Integer(jsonInteger(row[0], where)), Integer(jsonInteger(row[1], where))});
        }
        const auto& actual = out.config.lattice();
        if (detail::latticeFromRows(2, linalg::hermiteNormalForm(std::move(basis))) != actual)
            throw ProblemFileError(where + ": stated lattice does not match the stabilizer " + toString(actual));
    }
    return out;
}

inline Json rationalJson(const Rational& r) { return toString(r); }

inline Json systemJson(const ShiftSystem& sys) {
    Json rows = Json::array();
    for (const auto& row : sys.rows()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(rationalJson(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace detail

inline ProblemFile parseProblemFile(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ProblemFileError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ProblemFileError("problem file must be a JSON object");
    ProblemFile pf;
    if (j.contains("alpha")) pf.sys = detail::jsonSystem(j.at("alpha"), "alpha");
    if (pf.sys) {
        if (j.contains("m") && detail::jsonInteger(j.at("m"), "m") != static_cast<long>(pf.sys->m()))
            throw ProblemFileError("m does not match the number of alpha rows");
        if (j.contains("n") && detail::jsonInteger(j.at("n"), "n") != static_cast<long>(pf.sys->n()))
            throw ProblemFileError("n does not match the number of alpha columns");
    }
    if (j.contains("beta")) {
        BetaMatrix beta;
        const Json& bj = j.at("beta");
        if (!bj.is_array()) throw ProblemFileError("beta must be a list of rows");
        for (const auto& row : bj) {
            if (!row.is_array()) throw ProblemFileError("beta rows must be lists");
            std::vector<long> r;
            for (const auto& x : row) r.push_back(detail::jsonInteger(x, "beta"));
            beta.push_back(std::move(r));
        }
        pf.beta = std::move(beta);
    }
    if (j.contains("tuples")) {
        if (!j.at("tuples").is_object()) throw ProblemFileError("tuples must be an object");
        for (const auto& [name, body] : j.at("tuples").items()) pf.tuples.push_back(detail::jsonTuple(name, body, pf.sys));
    }
    if (j.contains("configs")) {
        if (!j.at("configs").is_object()) throw ProblemFileError("configs must be an object");
        for (const auto& [name, body] : j.at("configs").items())
            pf.configs.push_back(detail::jsonConfig(name, body, pf.sys));
    }
    if (j.contains("psi")) {
        const Json& p = j.at("psi");
        std::size_t m = pf.sys ? pf.sys->m() : detail::member(p, "forward", "psi").size();
        std::vector<Poly> fwd, inv;
        for (const auto& x : detail::member(p, "forward", "psi")) fwd.push_back(detail::jsonPoly(x, m, "psi forward"));
        for (const auto& x : detail::member(p, "inverse", "psi")) inv.push_back(detail::jsonPoly(x, m, "psi inverse"));
        try {
            pf.psi = AutomorphismSpec::make(std::move(fwd), std::move(inv));
        } catch (const std::exception& e) {
            throw ProblemFileError(std::string("psi: ") + e.what());
        }
    }
    return pf;
}

inline ProblemFile loadProblemFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProblemFileError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseProblemFile(buf.str());
}

inline Json tupleJson(const SolutionTuple& t, bool withAlpha) {
    Json polys = Json::array();
    for (const auto& p : t.polys) polys.push_back(toString(p));
    if (!withAlpha) return polys;
    Json out = Json::object();
    out["alpha"] = detail::systemJson(t.sys);
    out["polys"] = std::move(polys);
    return out;
}

inline Json factoredJson(const FactoredSolution& f) {
    Json entries = Json::array();
    for (const auto& e : f.entries) {
        Json factors = Json::array();
        for (const auto& [g, mult] : e.factors) factors.push_back(Json::array({toString(g), mult}));
        if (e.unit == 1) {
            entries.push_back(std::move(factors));
        } else {
            Json obj = Json::object();
            obj["unit"] = detail::rationalJson(e.unit);
            obj["factors"] = std::move(factors);
            entries.push_back(std::move(obj));
        }
    }
    Json out = Json::object();
    out["factored"] = std::move(entries);
    return out;
}

inline Json configJson(const VertexConfig& c) {
    Json out = Json::object();
    out["generator"] = toString(c.baseFace());
    out["pair"] = Json::array({c.pair().first + 1, c.pair().second + 1});
    Json lat = Json::array();
    for (const auto& row : c.lattice().basis) lat.push_back(Json(row));
    out["lattice"] = std::move(lat);
    Json edges = Json::array();
    for (const auto& [k, mult] : c.edges) edges.push_back(Json::array({k.first, k.second, mult}));
    out["edges"] = std::move(edges);
    return out;
}

/// A problem file holding one shift system and the given named tuples.
inline Json problemJson(const ShiftSystem& sys, const std::vector<std::pair<std::string, Json>>& tuples) {
    Json out = Json::object();
    out["m"] = sys.m();
    out["n"] = sys.n();
    out["alpha"] = detail::systemJson(sys);
    Json t = Json::object();
    for (const auto& [name, body] : tuples) t[name] = body;
    out["tuples"] = std::move(t);
    return out;
}

}  // namespace tgwa
