#include <doctest.h>

#include "amalg/canonical.hpp"
#include "amalg/errors.hpp"
#include "amalg/fixtures.hpp"
#include "amalg/validate.hpp"
#include "amalg/vformation.hpp"
#include "helpers.hpp"

using namespace amalg;
using helpers::diag;
using helpers::operator+;

namespace {

std::map<std::string, std::string> identityOn(const Structure& s) {
    std::map<std::string, std::string> m;
    for (const auto& l : s.universe()) m[l] = l;
    return m;
}

}  // namespace

TEST_CASE("normalize_instance re-suffixes an already-normalized instance") {
    Structure c({"c"}, diag({"c"}), diag({"c"}));
    Structure a({"a", "c"}, diag({"a", "c"}) + std::vector<LabelPair>{{"a", "c"}},
                diag({"a", "c"}));
    Structure b({"b", "c"}, diag({"b", "c"}), diag({"b", "c"}));
    auto norm = normalize_instance(a, b, c, identityOn(c), identityOn(c), urquhartTheory());
    CHECK(norm.v.A.universe() == std::vector<std::string>{"a@a", "c"});
    CHECK(norm.v.B.universe() == std::vector<std::string>{"b@b", "c"});
    CHECK(norm.v.C == c);
    CHECK(norm.v.A.leq().contains("a@a", "c"));
    CHECK(vformation_check(norm.v).ok());
}

TEST_CASE("normalize_instance disjointifies accidental label sharing") {
    // Both arms use the label "z" outside the embedded image.
    Structure c({"c"}, diag({"c"}), diag({"c"}));
    Structure a({"c", "z"}, diag({"c", "z"}), diag({"c", "z"}));
    Structure b({"c", "z"}, diag({"c", "z"}), diag({"c", "z"}));
    auto norm = normalize_instance(a, b, c, identityOn(c), identityOn(c), urquhartTheory());
    CHECK(norm.v.A.universe() == std::vector<std::string>{"c", "z@a"});
    CHECK(norm.v.B.universe() == std::vector<std::string>{"c", "z@b"});
    CHECK(norm.aMap.at("z") == "z@a");
    CHECK(norm.bMap.at("z") == "z@b");
    CHECK(vformation_check(norm.v).ok());
}

TEST_CASE("normalize_instance turns explicit embeddings into the catalogued instance") {
    // The doubly ordered instance given through renaming embeddings.
    Structure c({"p", "q"}, diag({"p", "q"}), diag({"p", "q"}));
    Structure a({"a", "c", "d"}, diag({"a", "c", "d"}) + std::vector<LabelPair>{{"a", "c"}},
                diag({"a", "c", "d"}) + std::vector<LabelPair>{{"a", "d"}});
    Structure b({"b", "c", "d"}, diag({"b", "c", "d"}) + std::vector<LabelPair>{{"c", "b"}},
                diag({"b", "c", "d"}) + std::vector<LabelPair>{{"d", "b"}});
    std::map<std::string, std::string> i1{{"p", "c"}, {"q", "d"}};
    auto norm = normalize_instance(a, b, c, i1, i1, urquhartTheory());
    // The common part keeps its own labels; arm-only elements get suffixed.
    CHECK(norm.v.C.universe() == std::vector<std::string>{"p", "q"});
    CHECK(norm.v.A.leq().contains("a@a", "p"));
    CHECK(norm.v.A.ll().contains("a@a", "q"));
    CHECK(norm.v.B.leq().contains("p", "b@b"));
    CHECK(norm.v.B.ll().contains("q", "b@b"));

    // Identical shape to the catalogued instance, up to isomorphism.
    auto fx = fixtures::fixture("urquhart-5.1");
    CHECK(canonical_form(norm.v.A) == canonical_form(fx.v.A));
    CHECK(canonical_form(norm.v.B) == canonical_form(fx.v.B));
    CHECK(canonical_form(norm.v.C) == canonical_form(fx.v.C));
}

TEST_CASE("normalize_instance rejects non-embeddings") {
    Structure c({"c"}, diag({"c"}), diag({"c"}));
    Structure a({"a", "c"}, diag({"a", "c"}), diag({"a", "c"}));
    std::map<std::string, std::string> bad{{"c", "missing"}};
    CHECK_THROWS_AS(normalize_instance(a, a, c, bad, identityOn(c), Theory{}), NotAnEmbedding);
}

TEST_CASE("normalized pieces validate iff the inputs did") {
    helpers::Rng rng(4242);
    for (int round = 0; round < 60; ++round) {
        Theory t = helpers::randomAdmissibleTheory(rng);
        VFormation v = helpers::randomVFormation(t, rng, 3);
        auto norm = normalize_instance(v.A, v.B, v.C, identityOn(v.C), identityOn(v.C), t);
        CHECK(vformation_check(norm.v).ok());
        CHECK(validate(norm.v.A, t).ok());
        CHECK(validate(norm.v.B, t).ok());
        CHECK(validate(norm.v.C, t).ok());
    }
}

TEST_CASE("canonical form is invariant under relabeling of a 3-chain") {
    Structure chain1({"a", "b", "c"},
                     diag({"a", "b", "c"}) +
                         std::vector<LabelPair>{{"a", "b"}, {"b", "c"}, {"a", "c"}},
                     diag({"a", "b", "c"}));
    Structure chain2({"x", "y", "z"},
                     diag({"x", "y", "z"}) +
                         std::vector<LabelPair>{{"z", "y"}, {"y", "x"}, {"z", "x"}},
                     diag({"x", "y", "z"}));
    CHECK(canonical_form(chain1) == canonical_form(chain2));
}

TEST_CASE("canonical form separates chain from antichain") {
    Structure chain({"a", "b"}, diag({"a", "b"}) + std::vector<LabelPair>{{"a", "b"}},
                    diag({"a", "b"}));
    Structure anti({"a", "b"}, diag({"a", "b"}), diag({"a", "b"}));
    CHECK(canonical_form(chain) != canonical_form(anti));
}

TEST_CASE("the five 3-element posets have pairwise distinct canonical forms") {
    // Independent brute force: all reflexive antisymmetric transitive
    // relations on three points, counted up to permutation.
    CHECK(helpers::countPosets3UpToIso() == 5);

    std::set<std::string> forms;
    int posets = 0;
    for (unsigned bits = 0; bits < 512; ++bits) {
        helpers::TinyRel r{bits};
        if (!helpers::tinyIsPoset(r)) continue;
        ++posets;
        std::vector<LabelPair> pairs;
        const std::vector<std::string> u{"a", "b", "c"};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (r.get(i, j)) pairs.emplace_back(u[i], u[j]);
        forms.insert(canonical_form(Structure(u, pairs, pairs)));
    }
    CHECK(posets == 19);  // labeled posets on three points
    CHECK(forms.size() == 5);
}

TEST_CASE("canonical form is a congruence for isomorphism") {
    helpers::Rng rng(31337);
    for (int round = 0; round < 1000; ++round) {
        Theory t = helpers::randomAdmissibleTheory(rng);
        Structure s = helpers::randomModel({"a", "b", "c", "d"}, t, rng, {}, {}, 8);

        // Random relabeling.
        std::vector<std::string> fresh{"p", "q", "r", "s"};
        for (int i = 3; i > 0; --i) std::swap(fresh[i], fresh[rng.below(i + 1)]);
        std::vector<LabelPair> leqPairs, llPairs;
        auto rename = [&](const std::string& l) { return fresh[s.indexOf(l)]; };
        for (auto& [x, y] : s.leq().pairs()) leqPairs.emplace_back(rename(x), rename(y));
        for (auto& [x, y] : s.ll().pairs()) llPairs.emplace_back(rename(x), rename(y));
        Structure permuted(fresh, leqPairs, llPairs);
        CHECK(canonical_form(s) == canonical_form(permuted));
    }
}

TEST_CASE("canonical form rejects oversized universes") {
    std::vector<std::string> u;
    for (int i = 0; i < 9; ++i) u.push_back("e" + std::to_string(i));
    CHECK_THROWS_AS(canonical_form(Structure(u, {}, {})), SizeBoundExceeded);
}
