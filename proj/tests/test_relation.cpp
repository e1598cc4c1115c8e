#include <doctest.h>

#include "amalg/errors.hpp"
#include "amalg/relation.hpp"
#include "helpers.hpp"

using namespace amalg;
using helpers::closureRef;
using helpers::composeRef;
using helpers::pairSet;
using helpers::PairSet;

namespace {

BinRel rel(std::vector<std::string> universe, std::vector<LabelPair> pairs) {
    return BinRel(std::move(universe), pairs);
}

BinRel randomRel(helpers::Rng& rng, const std::vector<std::string>& universe, int pairs) {
    const int n = static_cast<int>(universe.size());
    PairSet ps;
    for (int k = 0; k < pairs; ++k) ps.emplace(universe[rng.below(n)], universe[rng.below(n)]);
    return BinRel(universe, {ps.begin(), ps.end()});
}

}  // namespace

TEST_CASE("compose chains single pair") {
    auto r = rel({"a", "b", "c"}, {{"a", "c"}});
    auto s = rel({"a", "b", "c"}, {{"c", "b"}});
    CHECK(pairSet(compose(r, s)) == PairSet{{"a", "b"}});
}

TEST_CASE("compose with empty left is empty") {
    auto r = rel({"a", "b", "c"}, {});
    auto s = rel({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
    CHECK(pairSet(compose(r, s)).empty());
    CHECK(pairSet(compose(s, r)).empty());
}

TEST_CASE("compose enumerates all middle elements") {
    auto r = rel({"a", "b", "c"}, {{"a", "c"}, {"c", "c"}});
    auto s = rel({"a", "b", "c"}, {{"c", "b"}, {"b", "b"}});
    // Reference oracle (pair-set loops) agrees with the hand-derived value.
    PairSet expected{{"a", "b"}, {"c", "b"}};
    CHECK(composeRef(pairSet(r), pairSet(s)) == expected);
    CHECK(pairSet(compose(r, s)) == expected);
}

TEST_CASE("compose rejects universe mismatch") {
    auto r = rel({"a", "b"}, {});
    auto s = rel({"a", "c"}, {});
    CHECK_THROWS_AS(compose(r, s), UniverseMismatch);
}

TEST_CASE("transitive closure adds one chaining step") {
    auto r = rel({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(pairSet(transitive_closure(r)) == PairSet{{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

TEST_CASE("transitive closure is identity on transitive input") {
    auto r = rel({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "a"}});
    CHECK(transitive_closure(r) == r);
}

TEST_CASE("transitive closure of a 2-cycle fills both loops") {
    auto r = rel({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    PairSet expected{{"a", "b"}, {"b", "a"}, {"a", "a"}, {"b", "b"}};
    CHECK(closureRef(pairSet(r)) == expected);  // fixpoint iteration by hand
    CHECK(pairSet(transitive_closure(r)) == expected);
}

TEST_CASE("check_rel_props accepts reflexive singleton") {
    auto r = rel({"a"}, {{"a", "a"}});
    CHECK(check_rel_props(r, {.reflexive = true}).ok());
}

TEST_CASE("check_rel_props reports antisymmetry with least witness") {
    auto r = rel({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    Report rep = check_rel_props(r, {.antisymmetric = true});
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].axiom == "ANTISYMMETRIC");
    CHECK(rep.violations[0].witness == std::vector<std::string>{"a", "b"});
}

TEST_CASE("check_rel_props always reports missing transitivity") {
    auto r = rel({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    Report rep = check_rel_props(r, {});
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].axiom == "TRANSITIVE");
    CHECK(rep.violations[0].witness == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("duplicate pairs are rejected") {
    CHECK_THROWS_AS(rel({"a"}, {{"a", "a"}, {"a", "a"}}), InvalidInput);
}

TEST_CASE("composition is associative and distributes over union") {
    helpers::Rng rng(7231);
    const std::vector<std::string> u{"p", "q", "r", "s"};
    for (int round = 0; round < 200; ++round) {
        auto a = randomRel(rng, u, rng.below(7));
        auto b = randomRel(rng, u, rng.below(7));
        auto c = randomRel(rng, u, rng.below(7));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));

        auto bc = BinRel::fromMat(u, b.mat().unionWith(c.mat()));
        auto lhs = compose(a, bc);
        auto rhs = BinRel::fromMat(u, compose(a, b).mat().unionWith(compose(a, c).mat()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("closure is monotone, idempotent and the union of iterated compositions") {
    helpers::Rng rng(9417);
    const std::vector<std::string> u{"p", "q", "r", "s", "t"};
    for (int round = 0; round < 200; ++round) {
        auto a = randomRel(rng, u, rng.below(9));
        auto closed = transitive_closure(a);
        CHECK(a.mat().subsetOf(closed.mat()));
        CHECK(transitive_closure(closed) == closed);
        CHECK(pairSet(closed) == closureRef(pairSet(a)));

        auto b = randomRel(rng, u, rng.below(9));
        auto ab = BinRel::fromMat(u, a.mat().unionWith(b.mat()));
        CHECK(transitive_closure(a).mat().subsetOf(transitive_closure(ab).mat()));
    }
}
