// tgwa: command-line front end for the consistency-equation toolkit.
//
// Exit codes: 0 success / check passed, 1 check failed or input is not a
// solution, 2 usage, parse or file errors.

#include "tgwa/factorize.hpp"
#include "tgwa/problem_file.hpp"
#include "tgwa/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

using namespace tgwa;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<const TupleEntry*> selectTuples(const ProblemFile& pf, const std::string& name) {
    std::vector<const TupleEntry*> out;
    if (!name.empty()) {
        out.push_back(&pf.tuple(name));
        return out;
    }
    for (const auto& t : pf.tuples) out.push_back(&t);
    if (out.empty()) throw UsageError("problem file contains no tuples");
    return out;
}

const ConfigEntry& selectConfig(const ProblemFile& pf, const std::string& name) {
    if (!name.empty()) return pf.config(name);
    if (pf.configs.empty()) throw UsageError("problem file contains no configurations");
    return pf.configs.front();
}

FactoredSolution factoredOf(const TupleEntry& t) {
    return t.factored ? *t.factored : factorTuple(*t.plain);
}

void printReport(const std::string& label, const CheckReport& rep) {
    std::cout << label << ": " << (rep.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& f : rep.failures) std::cout << "  " << describe(f) << '\n';
}

Json orbitJson(const OrbitId& orbit) {
    Json o = Json::object();
    o["generator"] = toString(orbit.generator);
    Json idx = Json::array();
    for (auto i : orbit.indexSet) idx.push_back(i + 1);
    o["indices"] = std::move(idx);
    Json lat = Json::array();
    for (const auto& row : orbit.stabilizer.basis) lat.push_back(Json(row));
    o["stabilizer"] = std::move(lat);
    return o;
}

Json pieceJson(const OrbitalPiece& piece) {
    Json p = Json::object();
    p["orbit"] = orbitJson(piece.orbit);
    auto pair = supportPair(piece);
    p["support"] = pair ? Json::array({pair->first + 1, pair->second + 1}) : Json("trivial");
    p["entries"] = factoredJson(piece.solution)["factored"];
    return p;
}

void writeOutput(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

int cmdVerify(const std::string& file, const std::string& tuple, const std::string& form) {
    ProblemFile pf = loadProblemFile(file);
    bool ok = true;
    for (const auto* t : selectTuples(pf, tuple)) {
        // Factored input is checked factor by factor, which avoids expanding
        // large products; the verdict is the same.
        CheckReport rep = form == "nonsym"   ? checkNonSymmetric(t->tuple())
                          : t->factored ? checkSymmetric(*t->factored)
                                        : checkSymmetric(t->tuple());
        printReport("tuple " + t->name + " (" + form + ")", rep);
        ok = ok && rep.passed();
    }
    return ok ? kOk : kFail;
}

int cmdSymmetrize(const std::string& file, const std::string& tuple, const std::string& out) {
    ProblemFile pf = loadProblemFile(file);
    std::vector<std::pair<std::string, Json>> tuples;
    const TupleEntry* first = nullptr;
    for (const auto* t : selectTuples(pf, tuple)) {
        if (first && !(t->sys() == first->sys())) throw UsageError("tuples use different shift systems; pass --tuple");
        if (!first) first = t;
        tuples.emplace_back(t->name, tupleJson(symmetrize(t->tuple()), false));
    }
    writeOutput(problemJson(first->sys(), tuples).dump(2) + "\n", out);
    return kOk;
}

int cmdDecompose(const std::string& file, const std::string& tuple) {
    ProblemFile pf = loadProblemFile(file);
    Json out = Json::object();
    for (const auto* t : selectTuples(pf, tuple)) {
        Json pieces = Json::array();
        for (const auto& piece : decompose(factoredOf(*t).monicPart())) pieces.push_back(pieceJson(piece));
        out[t->name] = std::move(pieces);
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmdClassify(const std::string& file, const std::string& tuple, bool configsOnly, const std::string& outPath) {
    ProblemFile pf = loadProblemFile(file);
    Json records = Json::object();
    Json configs = Json::object();
    for (const auto* t : selectTuples(pf, tuple)) {
        ClassificationRecord rec = classify(factoredOf(*t).monicPart());
        Json list = Json::array();
        for (std::size_t k = 0; k < rec.entries.size(); ++k) {
            const auto& e = rec.entries[k];
            Json r = Json::object();
            r["orbit"] = orbitJson(e.orbit);
            r["pair"] = Json::array({e.pair.first + 1, e.pair.second + 1});
            r["config"] = configJson(e.config);
            list.push_back(r);
            configs[t->name + "_" + std::to_string(k + 1)] = configJson(e.config);
        }
        records[t->name] = std::move(list);
    }
    if (!configsOnly) {
        writeOutput(records.dump(2) + "\n", outPath);
        return kOk;
    }
    Json out = Json::object();
    out["alpha"] = detail::systemJson(pf.system());
    out["configs"] = std::move(configs);
    writeOutput(out.dump(2) + "\n", outPath);
    return kOk;
}

int cmdDecode(const std::string& file, const std::string& config, const std::string& outPath) {
    ProblemFile pf = loadProblemFile(file);
    const ConfigEntry& c = selectConfig(pf, config);
    OrbitalPiece piece = decode(c.config);
    CheckReport rep = checkBinary(piece.solution);
    if (!rep.passed()) throw std::logic_error("decoded configuration fails the binary relation");
    writeOutput(problemJson(c.config.sys, {{c.name, factoredJson(piece.solution)}}).dump(2) + "\n", outPath);
    return kOk;
}

int cmdMultiquiver(const std::string& file) {
    ProblemFile pf = loadProblemFile(file);
    if (!pf.beta) throw UsageError("problem file has no beta");
    CheckReport rep = validateBeta(*pf.beta);
    if (!rep.passed()) {
        printReport("beta", rep);
        return kFail;
    }
    SolutionTuple t = buildSolution(*pf.beta);
    SolutionTuple q = symmetrizedSolution(*pf.beta);
    Json out = problemJson(t.sys, {{"t", tupleJson(t, false)},
                                   {"q", tupleJson(q, false)},
                                   {"q_factored", factoredJson(symmetrizedFactors(*pf.beta))}});
    bool allRowsNonzero = std::all_of(pf.beta->begin(), pf.beta->end(), [](const auto& r) { return rowGcd(r) != 0; });
    if (allRowsNonzero) {
        Json pieces = Json::array();
        for (const auto& rp : factorByResidue(*pf.beta)) {
            Json p = pieceJson(rp.piece);
            p["row"] = rp.row + 1;
            p["residue"] = toString(rp.residue);
            if (rp.oneSided) p["one_sided"] = true;
            pieces.push_back(std::move(p));
        }
        out["residue_pieces"] = std::move(pieces);
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

int cmdRender(const std::string& file, const std::string& config, const std::string& outPath) {
    ProblemFile pf = loadProblemFile(file);
    const ConfigEntry& c = selectConfig(pf, config);
    CheckReport rep = validate(c.config);
    if (!rep.passed()) {
        printReport("config " + c.name, rep);
        return kFail;
    }
    writeOutput(renderSvg(c.config), outPath);
    return kOk;
}

int cmdEquiv(const std::string& file, std::string a, std::string b, bool search) {
    ProblemFile pf = loadProblemFile(file);
    if (a.empty() || b.empty()) {
        if (pf.tuples.size() < 2) throw UsageError("equiv needs two tuples");
        a = pf.tuples[0].name;
        b = pf.tuples[1].name;
    }
    SolutionTuple ta = pf.tuple(a).tuple(), tb = pf.tuple(b).tuple();
    if (pf.psi) {
        CheckReport rep = checkEquivalence(*pf.psi, ta, tb);
        printReport("equivalence " + a + " -> " + b, rep);
        return rep.passed() ? kOk : kFail;
    }
    if (!search) throw UsageError("problem file has no psi; pass --search to try signed permutations");
    auto g = searchSignedPermutation(ta, tb);
    if (!g) {
        std::cout << "equivalence " << a << " -> " << b << ": no signed permutation found\n";
        return kFail;
    }
    std::cout << "equivalence " << a << " -> " << b << ": PASS via g =";
    for (const auto& row : *g) {
        std::cout << " [";
        for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? "," : "") << toString(row[k]);
        std::cout << "]";
    }
    std::cout << '\n';
    return kOk;
}

int cmdGenRandom(const std::string& file, const std::string& orbit, const std::vector<std::size_t>& pair, unsigned loops,
                 std::uint64_t seed, const std::string& outPath) {
    ProblemFile pf = loadProblemFile(file);
    const ShiftSystem& sys = pf.system();
    if (pair.size() != 2 || pair[0] < 1 || pair[1] < 1 || pair[0] > sys.n() || pair[1] > sys.n() || pair[0] == pair[1])
        throw UsageError("--pair must be two distinct indices in 1..n");
    Poly gen = parsePoly(orbit, sys.m());
    auto [scale, monic] = makeMonic(gen);
    OrbitId id = makeOrbitId(sys, monic, {pair[0] - 1, pair[1] - 1});
    VertexConfig c = randomConfig(sys, id, loops, seed);
    c.generatorScale = scale;
    Json out = Json::object();
    out["alpha"] = detail::systemJson(sys);
    Json configs = Json::object();
    configs["random"] = configJson(c);
    out["configs"] = std::move(configs);
    writeOutput(out.dump(2) + "\n", outPath);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for TGWA consistency equations"};
    app.require_subcommand(1);
    std::string file, tuple, config, form = "sym", out, a, b, orbit;
    std::vector<std::size_t> pair{1, 2};
    unsigned loops = 1;
    std::uint64_t seed = 1;
    bool search = false;
    int rc = kOk;

    auto* verify = app.add_subcommand("verify", "check the consistency relations");
    verify->add_option("file", file)->required();
    verify->add_option("--tuple", tuple, "tuple name (default: all)");
    verify->add_option("--form", form, "sym (half shifts) or nonsym (full shifts)")
        ->check(CLI::IsMember({"sym", "nonsym"}));
    verify->callback([&] { rc = cmdVerify(file, tuple, form); });

    auto* sym = app.add_subcommand("symmetrize", "emit p~_i = sigma_i^{1/2}(p_i) as a problem file");
    sym->add_option("file", file)->required();
    sym->add_option("--tuple", tuple);
    sym->add_option("-o,--output", out);
    sym->callback([&] { rc = cmdSymmetrize(file, tuple, out); });

    auto* dec = app.add_subcommand("decompose", "orbital pieces of a monic solution");
    dec->add_option("file", file)->required();
    dec->add_option("--tuple", tuple);
    dec->callback([&] { rc = cmdDecompose(file, tuple); });

    auto* enc = app.add_subcommand("encode", "solution -> vertex configurations");
    enc->add_option("file", file)->required();
    enc->add_option("--tuple", tuple);
    enc->add_option("-o,--output", out);
    enc->callback([&] { rc = cmdClassify(file, tuple, true, out); });

    auto* dcd = app.add_subcommand("decode", "vertex configuration -> factored solution");
    dcd->add_option("file", file)->required();
    dcd->add_option("--config", config);
    dcd->add_option("-o,--output", out);
    dcd->callback([&] { rc = cmdDecode(file, config, out); });

    auto* cls = app.add_subcommand("classify", "orbits, index pairs and configurations of a solution");
    cls->add_option("file", file)->required();
    cls->add_option("--tuple", tuple);
    cls->add_option("-o,--output", out);
    cls->callback([&] { rc = cmdClassify(file, tuple, false, out); });

    auto* mq = app.add_subcommand("multiquiver", "solutions from an integer matrix beta");
    mq->add_option("--beta", file, "problem file with a beta matrix")->required();
    mq->callback([&] { rc = cmdMultiquiver(file); });

    auto* render = app.add_subcommand("render", "draw a configuration as SVG");
    render->add_option("file", file)->required();
    render->add_option("--config", config);
    render->add_option("-o,--output", out)->required();
    render->callback([&] { rc = cmdRender(file, config, out); });

    auto* eq = app.add_subcommand("equiv", "check equivalence of two pairs under psi");
    eq->add_option("file", file)->required();
    eq->add_option("--a", a);
    eq->add_option("--b", b);
    eq->add_flag("--search", search, "search signed permutations when no psi is given");
    eq->callback([&] { rc = cmdEquiv(file, a, b, search); });

    auto* gen = app.add_subcommand("gen-random", "reproducible random configuration");
    gen->add_option("file", file, "problem file providing alpha")->required();
    gen->add_option("--orbit", orbit, "orbit generator expression")->required();
    gen->add_option("--pair", pair, "index pair")->expected(2);
    gen->add_option("--loops", loops);
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", out);
    gen->callback([&] { rc = cmdGenRandom(file, orbit, pair, loops, seed, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const StructureError& e) {
        std::cerr << "not a solution: " << e.what() << '\n';
        return kFail;
    } catch (const InvalidConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kFail;
    } catch (const OrbitDecisionError& e) {
        std::cerr << "undecided: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return rc;
}
