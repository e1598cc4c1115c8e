#include <doctest.h>

#include "amalg/errors.hpp"
#include "amalg/validate.hpp"
#include "helpers.hpp"

using namespace amalg;
using helpers::diag;
using helpers::operator+;

TEST_CASE("validate accepts the one-element model with a bare loop") {
    // c leq c, no ll loop; antisymmetric ll, finer, A2.
    Structure s({"c"}, {{"c", "c"}}, {});
    Theory t;
    t.Q.antisymmetric = true;
    t.finer = true;
    t.a2 = true;
    CHECK(validate(s, t).ok());
}

TEST_CASE("validate accepts a reflexive-only doubly preordered pair") {
    Structure s({"x", "y"}, diag({"x", "y"}), diag({"x", "y"}));
    CHECK(validate(s, urquhartTheory()).ok());
}

TEST_CASE("validate reports a finer violation with its pair") {
    Structure s({"x", "y"}, diag({"x", "y"}) + std::vector<LabelPair>{{"x", "y"}},
                {{"y", "x"}});
    Theory t;
    t.finer = true;
    Report rep = validate(s, t);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "FINER");
    CHECK(rep.violations[0].witness == std::vector<std::string>{"y", "x"});
}

TEST_CASE("validate checks A1 and A2 with witnesses") {
    // w leq x, x ll y, but not w ll y.
    Structure s({"w", "x", "y"}, diag({"w", "x", "y"}) + std::vector<LabelPair>{{"w", "x"}},
                {{"x", "y"}});
    Theory t;
    t.a1 = true;
    Report rep = validate(s, t);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "A1");
    CHECK(rep.violations[0].witness == std::vector<std::string>{"w", "x", "y"});
}

TEST_CASE("validate enforces the urquhart condition") {
    Structure s({"x", "y"}, diag({"x", "y"}) + std::vector<LabelPair>{{"x", "y"}},
                diag({"x", "y"}) + std::vector<LabelPair>{{"x", "y"}});
    Theory t = urquhartTheory();
    Report rep = validate(s, t);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "U");
    CHECK(rep.violations[0].witness == std::vector<std::string>{"x", "y"});
}

TEST_CASE("validate enforces union-of-chains and antichain width") {
    // z below both x and y, which stay incomparable.
    Structure s({"x", "y", "z"},
                diag({"x", "y", "z"}) + std::vector<LabelPair>{{"z", "x"}, {"z", "y"}},
                diag({"x", "y", "z"}) + std::vector<LabelPair>{{"z", "x"}, {"z", "y"}});
    Theory t = posetTheory();
    t.unionOfChains = true;
    Report rep = validate(s, t);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "UNION_OF_CHAINS");
    CHECK(rep.violations[0].witness == std::vector<std::string>{"x", "y", "z"});

    Theory t2 = posetTheory();
    t2.maxAntichain = 2;
    Structure anti({"x", "y", "z"}, diag({"x", "y", "z"}), diag({"x", "y", "z"}));
    Report rep2 = validate(anti, t2);
    REQUIRE(!rep2.ok());
    CHECK(rep2.violations[0].axiom == "MAX_ANTICHAIN");
    CHECK(rep2.violations[0].witness == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("validate checks operation preservation") {
    std::map<std::string, OpTable> ops{{"f", {{"x", "y"}, {"y", "x"}}}};
    Structure s({"x", "y"}, diag({"x", "y"}) + std::vector<LabelPair>{{"x", "y"}},
                diag({"x", "y"}), ops);
    Theory t;
    t.opSig["f"] = {.leq = true};
    Report rep = validate(s, t);
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "OP_PRESERVES_LEQ(f)");
    CHECK(rep.violations[0].witness == std::vector<std::string>{"x", "y"});
}

TEST_CASE("empty structures model everything") {
    Structure empty;
    Theory contradictory;
    contradictory.P.reflexive = true;
    contradictory.P.antireflexive = true;
    CHECK(validate(empty, contradictory).ok());
}

TEST_CASE("validate implies check_rel_props on both reducts") {
    helpers::Rng rng(5150);
    for (int round = 0; round < 120; ++round) {
        Theory t = helpers::randomAdmissibleTheory(rng);
        Structure s = helpers::randomModel({"p", "q", "r", "s"}, t, rng);
        REQUIRE(validate(s, t).ok());
        CHECK(check_rel_props(s.leq(), t.P).ok());
        CHECK(check_rel_props(s.ll(), t.Q).ok());
    }
}

TEST_CASE("is_embedding accepts induced substructure inclusions") {
    Structure d({"a", "b", "c"}, diag({"a", "b", "c"}) + std::vector<LabelPair>{{"a", "b"}},
                {{"a", "b"}});
    Structure s = d.induced({"a", "b"});
    std::map<std::string, std::string> inc{{"a", "a"}, {"b", "b"}};
    CHECK(is_embedding(inc, s, d, Theory{}).ok());
}

TEST_CASE("is_embedding rejects a map that fails reflection") {
    // The target has b leq c; the source does not.
    Structure b({"b", "c", "d"}, diag({"b", "c", "d"}) + std::vector<LabelPair>{{"c", "b"}},
                diag({"b", "c", "d"}) + std::vector<LabelPair>{{"d", "b"}});
    Structure d({"b", "c", "d"},
                diag({"b", "c", "d"}) + std::vector<LabelPair>{{"c", "b"}, {"b", "c"}},
                diag({"b", "c", "d"}) + std::vector<LabelPair>{{"d", "b"}});
    std::map<std::string, std::string> inc{{"b", "b"}, {"c", "c"}, {"d", "d"}};
    Report rep = is_embedding(inc, b, d, urquhartTheory());
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "LEQ_REFLECTION");
    CHECK(rep.violations[0].witness == std::vector<std::string>{"b", "c"});
}

TEST_CASE("is_embedding rejects a constant map") {
    Structure s({"x", "y"}, diag({"x", "y"}), diag({"x", "y"}));
    std::map<std::string, std::string> f{{"x", "x"}, {"y", "x"}};
    Report rep = is_embedding(f, s, s, Theory{});
    REQUIRE(!rep.ok());
    CHECK(rep.violations[0].axiom == "INJECTIVE");
}

TEST_CASE("embeddings transport validity of universal axioms back to the source") {
    helpers::Rng rng(8088);
    for (int round = 0; round < 120; ++round) {
        Theory t = helpers::randomAdmissibleTheory(rng);
        Structure big = helpers::randomModel({"p", "q", "r", "s", "t"}, t, rng);
        REQUIRE(validate(big, t).ok());
        // Any induced substructure embeds by inclusion; universal axioms pass down.
        std::vector<std::string> subset;
        for (const auto& l : big.universe())
            if (rng.coin()) subset.push_back(l);
        Structure sub = big.induced(subset);
        std::map<std::string, std::string> inc;
        for (const auto& l : subset) inc[l] = l;
        CHECK(is_embedding(inc, sub, big, t).ok());
        CHECK(validate(sub, t).ok());
    }
}
