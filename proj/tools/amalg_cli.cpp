// Command-line front end: validate structures, build and verify amalgams,
// lift and linearize relations, run bounded searches, enumerate finite models
// and reproduce the catalogued counterexample instances.
//
// All results go to stdout as JSON; human-readable summaries go to stderr.
// Exit codes: 0 success/ok/witness, 1 verification failure or exhausted
// search, 2 input or usage error, 3 time budget exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "amalg/auxrel.hpp"
#include "amalg/canonical.hpp"
#include "amalg/construct.hpp"
#include "amalg/errors.hpp"
#include "amalg/fixtures.hpp"
#include "amalg/fraisse.hpp"
#include "amalg/json_io.hpp"
#include "amalg/oracle.hpp"
#include "amalg/validate.hpp"
#include "amalg/vformation.hpp"

namespace {

using amalg::io::json;

json loadJson(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw amalg::InvalidInput("cannot open " + path);
    return json::parse(in);  // parse_error carries the byte offset
}

amalg::Theory loadTheory(const std::string& path) {
    return amalg::io::theoryFromJson(loadJson(path));
}

/// V-formation files either come normalized ({"A","B","C"}) or carry explicit
/// embeddings ("iota1"/"kappa1"), in which case they are normalized first.
amalg::VFormation loadVFormation(const std::string& path, const amalg::Theory& t) {
    json j = loadJson(path);
    amalg::VFormation v = amalg::io::vformationFromJson(j);
    if (j.contains("iota1") || j.contains("kappa1")) {
        std::map<std::string, std::string> i1, k1;
        for (auto it = j["iota1"].begin(); it != j["iota1"].end(); ++it)
            i1[it.key()] = it.value().get<std::string>();
        for (auto it = j["kappa1"].begin(); it != j["kappa1"].end(); ++it)
            k1[it.key()] = it.value().get<std::string>();
        return amalg::normalize_instance(v.A, v.B, v.C, i1, k1, t).v;
    }
    if (amalg::Report r = amalg::vformation_check(v); !r.ok())
        throw amalg::InvalidInput("V-formation in " + path + " is not normalized (" +
                                  r.violations.front().axiom + ")");
    return v;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int runValidate(const std::string& file, const std::string& theoryFile) {
    amalg::Structure s = amalg::io::structureFromJson(loadJson(file));
    amalg::Report r = amalg::validate(s, loadTheory(theoryFile));
    emit(amalg::io::toJson(r));
    std::cerr << (r.ok() ? "ok" : std::to_string(r.violations.size()) + " violation(s)") << "\n";
    return r.ok() ? 0 : 1;
}

int runAmalgamate(const std::string& vfile, const std::string& theoryFile,
                  const std::string& mode, const std::string& outFile) {
    amalg::Theory t = loadTheory(theoryFile);
    amalg::VFormation v = loadVFormation(vfile, t);
    json out;
    int code = 0;
    if (mode == "construct") {
        amalg::construct::Amalgam w = amalg::construct::amalgamate(v, t);
        out = amalg::io::toJson(w);
        std::cerr << "amalgam over " << w.D.size() << " elements, verified\n";
    } else {
        amalg::oracle::SearchResult r = amalg::oracle::decide_superamalgamation_over_union(v, t);
        out = amalg::io::toJson(r);
        if (r.isWitness()) {
            std::cerr << "witness over the union, " << r.stats.nodesVisited << " nodes\n";
        } else {
            std::cerr << "exhausted after " << r.stats.nodesVisited << " nodes\n";
            code = 1;
        }
    }
    emit(out);
    if (!outFile.empty()) {
        std::ofstream f(outFile);
        f << out.dump(2) << "\n";
    }
    return code;
}

int runVerify(const std::string& vfile, const std::string& afile, const std::string& theoryFile,
              const std::string& level) {
    amalg::Theory t = loadTheory(theoryFile);
    amalg::VFormation v = loadVFormation(vfile, t);
    amalg::construct::Amalgam w = amalg::io::amalgamFromJson(loadJson(afile));
    amalg::Report r = amalg::construct::verify(v, w, t, amalg::io::modeFromName(level));
    emit(amalg::io::toJson(r));
    std::cerr << (r.ok() ? "ok at " + level : std::to_string(r.violations.size()) + " violation(s)")
              << "\n";
    return r.ok() ? 0 : 1;
}

int runLift(const std::string& dfile, const std::string& efile, const std::string& theoryFile) {
    amalg::Theory t = loadTheory(theoryFile);
    amalg::Structure d = amalg::io::structureFromJson(loadJson(dfile));
    amalg::BinRel eleq = amalg::io::binRelFromJson(loadJson(efile));
    amalg::BinRel lifted = amalg::construct::lift(d, eleq, t);
    amalg::Structure e = amalg::Structure::fromParts(eleq.universe(), eleq.mat(), lifted.mat());
    emit(amalg::io::toJson(e));
    std::cerr << "lifted to " << e.size() << " elements, verified\n";
    return 0;
}

int runLinearize(const std::string& file) {
    json j = loadJson(file);
    amalg::BinRel r = j.contains("pairs") ? amalg::io::binRelFromJson(j)
                                          : amalg::io::structureFromJson(j).leq();
    emit(amalg::io::toJson(amalg::construct::szpilrajn(r)));
    std::cerr << "linear extension of " << r.size() << " elements\n";
    return 0;
}

int runLinearizePipeline(const std::string& vfile, const std::string& theoryFile) {
    amalg::Theory t = loadTheory(theoryFile);
    amalg::VFormation v = loadVFormation(vfile, t);
    amalg::construct::Amalgam w = amalg::construct::linearize_pipeline(v, t);
    emit(amalg::io::toJson(w));
    std::cerr << "linearized amalgam over " << w.D.size() << " elements, verified\n";
    return 0;
}

int runSearch(const std::string& vfile, const std::string& theoryFile, const std::string& level,
              bool identify, int extra, double budget) {
    amalg::Theory t = loadTheory(theoryFile);
    amalg::VFormation v = loadVFormation(vfile, t);
    amalg::oracle::SearchConfig cfg;
    cfg.allowIdentification = identify;
    cfg.extraElements = extra;
    cfg.timeBudgetSeconds = budget;
    amalg::oracle::SearchResult r =
        amalg::oracle::search(v, t, amalg::io::modeFromName(level), cfg);
    emit(amalg::io::toJson(r));
    std::cerr << (r.isWitness() ? "witness" : "exhausted") << " after " << r.stats.nodesVisited
              << " nodes\n";
    return r.isWitness() ? 0 : 1;
}

int runEnumerate(const std::string& theoryFile, int size) {
    auto models = amalg::fraisse::enumerate_models(loadTheory(theoryFile), size);
    for (const auto& m : models) std::cout << amalg::io::toJson(m).dump() << "\n";
    std::cerr << models.size() << " model(s) of size " << size << "\n";
    return 0;
}

int runCheckAp(const std::string& theoryFile, int size, const std::string& level) {
    amalg::fraisse::ApCheckReport r = amalg::fraisse::check_ap_at_size(
        loadTheory(theoryFile), size, amalg::io::modeFromName(level));
    json j;
    j["ok"] = r.ok;
    j["instances"] = r.instances;
    json failures = json::array();
    for (const auto& f : r.failures) {
        json e;
        e["vformation"] = amalg::io::toJson(f.v);
        e["search"] = amalg::io::toJson(f.result);
        failures.push_back(e);
    }
    j["failures"] = failures;
    emit(j);
    std::cerr << (r.ok ? "ok" : "failed") << " over " << r.instances << " instance(s)\n";
    return r.ok ? 0 : 1;
}

int runSaturate(const std::string& theoryFile, int level, int budget,
                const std::string& startFile) {
    amalg::Theory t = loadTheory(theoryFile);
    amalg::Structure m0 = startFile.empty()
                              ? amalg::Structure({"e1"}, {{"e1", "e1"}},
                                                 t.Q.reflexive || t.coarser
                                                     ? std::vector<amalg::LabelPair>{{"e1", "e1"}}
                                                     : std::vector<amalg::LabelPair>{})
                              : amalg::io::structureFromJson(loadJson(startFile));
    amalg::fraisse::SaturateResult r = amalg::fraisse::saturate(m0, t, level, budget);
    json j;
    j["structure"] = amalg::io::toJson(r.m);
    j["fixpoint"] = r.fixpoint;
    j["realized"] = r.realized;
    j["report"] = amalg::io::toJson(r.report);
    emit(j);
    std::cerr << (r.fixpoint ? "fixpoint" : "budget exhausted") << " at " << r.m.size()
              << " elements, " << r.realized << " extension(s) realized\n";
    return r.fixpoint ? 0 : 1;
}

int runFixtureList() {
    json j = json::array();
    for (const auto& n : amalg::fixtures::fixture_names()) j.push_back(n);
    emit(j);
    return 0;
}

int runFixtureRun(const std::string& name, int jobs) {
    if (name == "all") {
        auto outcomes = amalg::fixtures::run_all_detailed(jobs);
        bool allMatch = true;
        for (const auto& o : outcomes) {
            std::cout << amalg::io::toJson(o).dump() << "\n";
            std::cerr << o.name << ": " << (o.match ? "reproduced" : "MISMATCH") << "\n";
            allMatch = allMatch && o.match;
        }
        return allMatch ? 0 : 1;
    }
    amalg::fixtures::FixtureOutcome o = amalg::fixtures::run_fixture(amalg::fixtures::fixture(name));
    emit(amalg::io::toJson(o));
    std::cerr << o.name << ": " << (o.result.isWitness() ? "witness" : "exhausted")
              << (o.match ? " (as expected)" : " (MISMATCH)") << "\n";
    return o.result.isWitness() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite two-relation structures: amalgamation toolkit"};
    app.require_subcommand(1);

    std::string structureFile, theoryFile, vformFile, amalgamFile, eleqFile, outFile;
    std::string level = "super", mode = "construct", fixtureName, startFile;
    bool identify = false;
    int extra = 0, size = 0, budget = 0, jobs = 1;
    double timeBudget = 0.0;

    auto* validateCmd = app.add_subcommand("validate", "check a structure against a theory");
    validateCmd->add_option("structure", structureFile)->required();
    validateCmd->add_option("--theory", theoryFile)->required();

    auto* amalgamateCmd = app.add_subcommand("amalgamate", "amalgamate a V-formation");
    amalgamateCmd->add_option("vform", vformFile)->required();
    amalgamateCmd->add_option("--theory", theoryFile)->required();
    amalgamateCmd->add_option("--mode", mode)->check(CLI::IsMember({"construct", "oracle"}));
    amalgamateCmd->add_option("--out", outFile);

    auto* verifyCmd = app.add_subcommand("verify", "verify an amalgam at a level");
    verifyCmd->add_option("vform", vformFile)->required();
    verifyCmd->add_option("amalgam", amalgamFile)->required();
    verifyCmd->add_option("--theory", theoryFile)->required();
    verifyCmd->add_option("--level", level)->check(CLI::IsMember({"ap", "sap", "super"}));

    auto* liftCmd = app.add_subcommand("lift", "lift ll along a poset extension");
    liftCmd->add_option("structure", structureFile)->required();
    liftCmd->add_option("eleq", eleqFile)->required();
    liftCmd->add_option("--theory", theoryFile)->required();

    auto* linearizeCmd = app.add_subcommand("linearize", "deterministic linear extension");
    linearizeCmd->add_option("structure", structureFile)->required();

    auto* pipelineCmd =
        app.add_subcommand("linearize-pipeline", "amalgamate linearized-order arms");
    pipelineCmd->add_option("vform", vformFile)->required();
    pipelineCmd->add_option("--theory", theoryFile)->required();

    auto* searchCmd = app.add_subcommand("search", "bounded amalgam search");
    searchCmd->add_option("vform", vformFile)->required();
    searchCmd->add_option("--theory", theoryFile)->required();
    searchCmd->add_option("--level", level)->check(CLI::IsMember({"ap", "sap", "super"}));
    searchCmd->add_flag("--identify", identify, "allow identifying arm elements");
    searchCmd->add_option("--extra", extra, "fresh elements beyond the union")
        ->check(CLI::NonNegativeNumber);
    searchCmd->add_option("--time-budget", timeBudget, "wall-clock budget in seconds");

    auto* fraisseCmd = app.add_subcommand("fraisse", "finite-model tooling");
    fraisseCmd->require_subcommand(1);
    auto* enumCmd = fraisseCmd->add_subcommand("enumerate", "models up to isomorphism");
    enumCmd->add_option("--theory", theoryFile)->required();
    enumCmd->add_option("--size", size)->required()->check(CLI::Range(0, 6));
    auto* checkApCmd = fraisseCmd->add_subcommand("check-ap", "exhaustive AP check at a size");
    checkApCmd->add_option("--theory", theoryFile)->required();
    checkApCmd->add_option("--size", size)->required()->check(CLI::Range(0, 6));
    checkApCmd->add_option("--level", level)->check(CLI::IsMember({"ap", "sap", "super"}));
    auto* saturateCmd = fraisseCmd->add_subcommand("saturate", "extension-property closure");
    saturateCmd->add_option("--theory", theoryFile)->required();
    saturateCmd->add_option("--level", size, "substructure size bound")->required();
    saturateCmd->add_option("--budget", budget, "universe size cap")->required();
    saturateCmd->add_option("start", startFile, "seed structure (default: a single point)");

    auto* fixtureCmd = app.add_subcommand("fixture", "catalogued instances");
    fixtureCmd->require_subcommand(1);
    fixtureCmd->add_subcommand("list", "fixture names");
    auto* fixtureRunCmd = fixtureCmd->add_subcommand("run", "run one fixture or all");
    fixtureRunCmd->add_option("name", fixtureName)->required();
    fixtureRunCmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validateCmd->parsed()) return runValidate(structureFile, theoryFile);
        if (amalgamateCmd->parsed()) return runAmalgamate(vformFile, theoryFile, mode, outFile);
        if (verifyCmd->parsed()) return runVerify(vformFile, amalgamFile, theoryFile, level);
        if (liftCmd->parsed()) return runLift(structureFile, eleqFile, theoryFile);
        if (linearizeCmd->parsed()) return runLinearize(structureFile);
        if (pipelineCmd->parsed()) return runLinearizePipeline(vformFile, theoryFile);
        if (searchCmd->parsed())
            return runSearch(vformFile, theoryFile, level, identify, extra, timeBudget);
        if (fraisseCmd->parsed()) {
            if (enumCmd->parsed()) return runEnumerate(theoryFile, size);
            if (checkApCmd->parsed()) return runCheckAp(theoryFile, size, level);
            if (saturateCmd->parsed()) return runSaturate(theoryFile, size, budget, startFile);
        }
        if (fixtureCmd->parsed()) {
            if (fixtureRunCmd->parsed()) return runFixtureRun(fixtureName, jobs);
            return runFixtureList();
        }
    } catch (const amalg::TimeBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const amalg::VerificationFailed& e) {
        std::cerr << e.what() << "\n";
        emit(amalg::io::toJson(e.report));
        return 1;
    } catch (const amalg::NotAnEmbedding& e) {
        std::cerr << e.what() << "\n";
        emit(amalg::io::toJson(e.report));
        return 2;
    } catch (const amalg::NotAPartialOrder& e) {
        std::cerr << e.what() << "\n";
        emit(amalg::io::toJson(e.report));
        return 2;
    } catch (const amalg::NotAPoset& e) {
        std::cerr << e.what() << "\n";
        emit(amalg::io::toJson(e.report));
        return 2;
    } catch (const amalg::InvalidInput& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const amalg::Inadmissible& e) {
        std::cerr << e.what() << " (failed clause: " << e.clause << ")\n";
        return 2;
    } catch (const amalg::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const json::parse_error& e) {
        std::cerr << "JSON parse error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
