#include "amalg/fixtures.hpp"

#include <future>

#include "amalg/construct.hpp"
#include "amalg/errors.hpp"
#include "amalg/validate.hpp"

namespace amalg::fixtures {

namespace {

using construct::AmalgamMode;

std::vector<LabelPair> diag(std::initializer_list<std::string> labels) {
    std::vector<LabelPair> pairs;
    for (const auto& l : labels) pairs.emplace_back(l, l);
    return pairs;
}

std::vector<LabelPair> operator+(std::vector<LabelPair> a, const std::vector<LabelPair>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Fixture urquhart51() {
    Fixture f;
    f.name = "urquhart-5.1";
    f.theory = urquhartTheory();
    f.v.C = Structure({"c", "d"}, diag({"c", "d"}), diag({"c", "d"}));
    f.v.A = Structure({"a", "c", "d"}, diag({"a", "c", "d"}) + std::vector<LabelPair>{{"a", "c"}},
                      diag({"a", "c", "d"}) + std::vector<LabelPair>{{"a", "d"}});
    f.v.B = Structure({"b", "c", "d"}, diag({"b", "c", "d"}) + std::vector<LabelPair>{{"c", "b"}},
                      diag({"b", "c", "d"}) + std::vector<LabelPair>{{"d", "b"}});
    f.mode = AmalgamMode::AP;
    f.config = {.allowIdentification = true, .extraElements = 2};
    f.expected = Expected::EXHAUSTED;
    f.note =
        "Two preorders with (U); the only identification candidate clashes on its "
        "relations to the base, and transitivity plus (U) kills every unidentified "
        "candidate. Two spare points already give the forcing room.";
    return f;
}

Fixture urquhartFree53() {
    Fixture f = urquhart51();
    f.name = "urquhart-free-5.3";
    f.theory = urquhartTheory(/*transitive=*/false);
    f.mode = AmalgamMode::SAP;
    f.config = {};
    f.expected = Expected::WITNESS;
    f.useFreeAmalgamate = true;
    f.note = "Same instance without transitivity: the plain union amalgamates strongly.";
    return f;
}

Fixture auxOp33b() {
    Fixture f;
    f.name = "aux-op-3.3b";
    Theory t = causalSpaceTheory();
    t.opSig["f"] = {.leq = false, .ll = true};
    f.theory = t;

    std::map<std::string, OpTable> fC{{"f", {{"c", "c"}, {"c1", "c2"}, {"c2", "c1"}}}};
    f.v.C = Structure({"c", "c1", "c2"}, diag({"c", "c1", "c2"}), {}, fC);

    std::map<std::string, OpTable> fA{
        {"f", {{"c", "c"}, {"c1", "c2"}, {"c2", "c1"}, {"a1", "a2"}, {"a2", "a1"}}}};
    f.v.A = Structure({"a1", "a2", "c", "c1", "c2"},
                      diag({"a1", "a2", "c", "c1", "c2"}) +
                          std::vector<LabelPair>{{"c1", "a1"}, {"c2", "a2"}},
                      {{"c1", "a1"}, {"c2", "a2"}}, fA);

    std::map<std::string, OpTable> fB{
        {"f", {{"c", "c"}, {"c1", "c2"}, {"c2", "c1"}, {"b1", "b2"}, {"b2", "b1"}}}};
    f.v.B = Structure({"b1", "b2", "c", "c1", "c2"},
                      diag({"b1", "b2", "c", "c1", "c2"}) +
                          std::vector<LabelPair>{{"b1", "c1"}, {"c", "b2"}},
                      {}, fB);

    f.mode = AmalgamMode::AP;
    f.config = {.allowIdentification = true, .extraElements = 1};
    f.expected = Expected::EXHAUSTED;
    f.note =
        "A ll-only-preserving operation: A1 forces b1 ll a1, preservation then pushes "
        "ll down to the base where the arm refuses it. One spare point cannot help.";
    return f;
}

Fixture tuc61b() {
    Fixture f;
    f.name = "tuc-6.1b";
    Theory t;
    t.P = {.reflexive = true, .antisymmetric = true};
    t.coarser = true;
    t.unionOfChains = true;
    f.theory = t;

    f.v.C = Structure({"c", "d", "e"}, diag({"c", "d", "e"}), diag({"c", "d", "e"}));
    f.v.A = Structure({"a", "c", "d", "e"},
                      diag({"a", "c", "d", "e"}) + std::vector<LabelPair>{{"d", "a"}},
                      diag({"a", "c", "d", "e"}) +
                          std::vector<LabelPair>{{"d", "a"}, {"c", "a"}});
    f.v.B = Structure({"b", "c", "d", "e"},
                      diag({"b", "c", "d", "e"}) + std::vector<LabelPair>{{"d", "b"}},
                      diag({"b", "c", "d", "e"}) +
                          std::vector<LabelPair>{{"d", "b"}, {"e", "b"}});
    f.mode = AmalgamMode::AP;
    f.config = {.allowIdentification = true, .extraElements = 1};
    f.expected = Expected::EXHAUSTED;
    f.note =
        "Union-of-chains forces the new points comparable over their common lower "
        "bound; a coarser transitive ll then smuggles a forbidden pair into an arm.";
    return f;
}

Fixture tucn62b() {
    Fixture f;
    f.name = "tucn-6.2b";
    Theory t = posetTheory();
    t.maxAntichain = 2;
    t.opSig["f"] = {.leq = true, .ll = false};
    f.theory = t;

    std::map<std::string, OpTable> fC{{"f", {{"c", "c"}}}};
    f.v.C = Structure({"c"}, diag({"c"}), diag({"c"}), fC);
    std::map<std::string, OpTable> fA{{"f", {{"c", "c"}, {"a", "c"}}}};
    f.v.A = Structure({"a", "c"}, diag({"a", "c"}), diag({"a", "c"}), fA);
    std::map<std::string, OpTable> fB{{"f", {{"c", "c"}, {"b1", "b1"}}}};
    f.v.B = Structure({"b1", "c"}, diag({"b1", "c"}), diag({"b1", "c"}), fB);

    f.mode = AmalgamMode::AP;
    f.config = {.allowIdentification = true, .extraElements = 1};
    f.expected = Expected::EXHAUSTED;
    f.note =
        "Antichain width 2 forces the new points comparable, but the isotone "
        "operation sends them to incomparable values.";
    return f;
}

Fixture antichain63() {
    Fixture f;
    f.name = "antichain-6.3";
    Theory t = posetTheory();
    t.maxAntichain = 2;
    f.theory = t;

    auto cLeq = diag({"c", "c1", "c2"}) + std::vector<LabelPair>{{"c1", "c"}, {"c2", "c"}};
    f.v.C = Structure({"c", "c1", "c2"}, cLeq, cLeq);
    auto aLeq = diag({"a", "c", "c1", "c2"}) +
                std::vector<LabelPair>{{"c1", "c"}, {"c2", "c"}, {"c1", "a"}};
    f.v.A = Structure({"a", "c", "c1", "c2"}, aLeq, aLeq);
    auto bLeq = diag({"b1", "c", "c1", "c2"}) +
                std::vector<LabelPair>{{"c1", "c"}, {"c2", "c"}, {"c2", "b1"}};
    f.v.B = Structure({"b1", "c", "c1", "c2"}, bLeq, bLeq);

    f.mode = AmalgamMode::AP;
    f.config = {.allowIdentification = true, .extraElements = 1};
    f.expected = Expected::EXHAUSTED;
    f.note =
        "Width 2 again forces the new points comparable; transitivity then puts one "
        "above a base element its own arm keeps incomparable.";
    return f;
}

Theory theory64() {
    Theory t;
    t.Q = {.antisymmetric = true};
    t.finer = true;
    t.a2 = true;
    return t;
}

Fixture c2Fails64Sap() {
    Fixture f;
    f.name = "c2-fails-6.4-sap";
    f.theory = theory64();

    f.v.C = Structure({"c"}, {{"c", "c"}}, {});
    f.v.A = Structure({"a1", "c"},
                      {{"a1", "a1"}, {"a1", "c"}, {"c", "a1"}, {"c", "c"}},
                      {{"a1", "a1"}, {"a1", "c"}});
    f.v.B = Structure({"a2", "c"},
                      {{"a2", "a2"}, {"a2", "c"}, {"c", "a2"}, {"c", "c"}},
                      {{"a2", "a2"}, {"a2", "c"}});
    f.mode = AmalgamMode::SAP;
    f.config = {};  // over union
    f.expected = Expected::EXHAUSTED;
    f.note =
        "A2 forces ll both ways across the union and antisymmetry would collapse the "
        "two new points, so no strong amalgam exists over the union.";
    return f;
}

Fixture c2Fails64Ap() {
    Fixture f;
    f.name = "c2-fails-6.4-ap";
    f.theory = theory64();

    f.v.C = Structure({"c", "d"}, {{"c", "c"}, {"d", "c"}}, {});
    f.v.A = Structure({"a1", "c", "d"},
                      {{"a1", "a1"}, {"c", "c"}, {"a1", "c"}, {"a1", "d"}, {"d", "c"}},
                      {{"a1", "a1"}, {"a1", "c"}, {"a1", "d"}});
    f.v.B = Structure({"a2", "c", "d"},
                      {{"a2", "a2"},
                       {"c", "c"},
                       {"a2", "c"},
                       {"c", "a2"},
                       {"d", "c"},
                       {"d", "a2"}},
                      {{"a2", "a2"}, {"a2", "c"}});
    f.mode = AmalgamMode::AP;
    f.config = {.allowIdentification = true, .extraElements = 1};
    f.expected = Expected::EXHAUSTED;
    f.note =
        "The discriminating element d blocks the identification that the sap variant "
        "forces. Encoded maximally close to its source: the arm around a1 cannot also "
        "keep c below a1, since transitivity through a1 leq d would push c below d.";
    return f;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"urquhart-5.1", "urquhart-free-5.3", "aux-op-3.3b",      "tuc-6.1b",
            "tucn-6.2b",    "antichain-6.3",     "c2-fails-6.4-sap", "c2-fails-6.4-ap"};
}

Fixture fixture(const std::string& name) {
    if (name == "urquhart-5.1") return urquhart51();
    if (name == "urquhart-free-5.3") return urquhartFree53();
    if (name == "aux-op-3.3b") return auxOp33b();
    if (name == "tuc-6.1b") return tuc61b();
    if (name == "tucn-6.2b") return tucn62b();
    if (name == "antichain-6.3") return antichain63();
    if (name == "c2-fails-6.4-sap") return c2Fails64Sap();
    if (name == "c2-fails-6.4-ap") return c2Fails64Ap();
    throw InvalidInput("unknown fixture \"" + name + "\"");
}

FixtureOutcome run_fixture(const Fixture& f) {
    FixtureOutcome out;
    out.name = f.name;
    out.expected = f.expected;

    if (f.useFreeAmalgamate) {
        // The designated constructive route; the oracle then confirms.
        construct::Amalgam w = construct::free_amalgamate(f.v, f.theory);
        Report r = construct::verify(f.v, w, f.theory, f.mode);
        if (!r.ok())
            throw VerificationFailed("fixture " + f.name + ": free amalgam failed verification",
                                     std::move(r));
    }

    out.result = oracle::search(f.v, f.theory, f.mode, f.config);
    out.actual = out.result.isWitness() ? Expected::WITNESS : Expected::EXHAUSTED;
    out.match = out.actual == f.expected;
    return out;
}

std::vector<FixtureOutcome> run_all_detailed(int jobs) {
    const auto names = fixture_names();
    std::vector<FixtureOutcome> outcomes(names.size());
    if (jobs > 1) {
        std::vector<std::future<FixtureOutcome>> futures;
        for (const auto& name : names)
            futures.push_back(std::async(std::launch::async,
                                         [name] { return run_fixture(fixture(name)); }));
        for (size_t i = 0; i < futures.size(); ++i) outcomes[i] = futures[i].get();
    } else {
        for (size_t i = 0; i < names.size(); ++i) outcomes[i] = run_fixture(fixture(names[i]));
    }
    return outcomes;
}

Report run_all(int jobs) {
    Report rep;
    for (const auto& o : run_all_detailed(jobs)) {
        if (!o.match)
            rep.add("FIXTURE(" + o.name + ")",
                    {o.expected == Expected::WITNESS ? "expected WITNESS" : "expected EXHAUSTED",
                     o.actual == Expected::WITNESS ? "got WITNESS" : "got EXHAUSTED"});
    }
    return rep;
}

}  // namespace amalg::fixtures
