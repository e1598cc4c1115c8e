#pragma once

// Shared builders and independent reference oracles for the test suites. The
// reference code here deliberately avoids the library's own algorithms: plain
// pair-set loops only, so expected values are computed on an independent path.

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <doctest.h>

#include "amalg/construct.hpp"
#include "amalg/relation.hpp"
#include "amalg/structure.hpp"
#include "amalg/theory.hpp"
#include "amalg/validate.hpp"
#include "amalg/vformation.hpp"

namespace helpers {

using amalg::BinRel;
using amalg::LabelPair;
using amalg::Structure;
using amalg::Theory;
using amalg::VFormation;
using PairSet = std::set<LabelPair>;

inline std::vector<LabelPair> diag(std::initializer_list<std::string> labels) {
    std::vector<LabelPair> pairs;
    for (const auto& l : labels) pairs.emplace_back(l, l);
    return pairs;
}

inline std::vector<LabelPair> operator+(std::vector<LabelPair> a,
                                        const std::vector<LabelPair>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline PairSet pairSet(const BinRel& r) {
    auto ps = r.pairs();
    return PairSet(ps.begin(), ps.end());
}

// Reference composition: plain double loop over pair sets.
inline PairSet composeRef(const PairSet& r, const PairSet& s) {
    PairSet out;
    for (const auto& [x, y] : r)
        for (const auto& [y2, z] : s)
            if (y == y2) out.emplace(x, z);
    return out;
}

// Reference transitive closure: iterate composition-with-self to fixpoint.
inline PairSet closureRef(PairSet r) {
    for (;;) {
        PairSet step = composeRef(r, r);
        size_t before = r.size();
        r.insert(step.begin(), step.end());
        if (r.size() == before) return r;
    }
}

// --- independent enumeration of 3-element posets up to isomorphism ---

struct TinyRel {
    // relation on {0,1,2} as 9 bits, bit 3*i+j = (i,j)
    unsigned bits = 0;
    bool get(int i, int j) const { return (bits >> (3 * i + j)) & 1u; }
};

inline bool tinyIsPoset(TinyRel r) {
    for (int i = 0; i < 3; ++i)
        if (!r.get(i, i)) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i != j && r.get(i, j) && r.get(j, i)) return false;
            for (int k = 0; k < 3; ++k)
                if (r.get(i, j) && r.get(j, k) && !r.get(i, k)) return false;
        }
    return true;
}

inline int countPosets3UpToIso() {
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::set<unsigned> canon;
    for (unsigned bits = 0; bits < 512; ++bits) {
        TinyRel r{bits};
        if (!tinyIsPoset(r)) continue;
        unsigned best = ~0u;
        for (const auto& p : perms) {
            unsigned img = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (r.get(p[i], p[j])) img |= 1u << (3 * i + j);
            best = std::min(best, img);
        }
        canon.insert(best);
    }
    return static_cast<int>(canon.size());
}

// --- random model generation -----------------------------------------------
//
// Grows a structure by repeatedly adding a random pair and repairing with the
// Horn closure of the theory (transitivity, finer/coarser, A1/A2); additions
// that break a non-Horn axiom are rolled back. Only public library entry
// points are used for the final validity check.

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); }
    bool coin() { return below(2) == 1; }
};

inline void hornClose(PairSet& leq, PairSet& ll, const Theory& t) {
    for (;;) {
        size_t before = leq.size() + ll.size();
        if (t.transitive) {
            leq = closureRef(leq);
            ll = closureRef(ll);
        }
        if (t.finer) leq.insert(ll.begin(), ll.end());
        if (t.coarser) ll.insert(leq.begin(), leq.end());
        if (t.a1) {
            PairSet add = composeRef(leq, ll);
            ll.insert(add.begin(), add.end());
        }
        if (t.a2) {
            PairSet add = composeRef(ll, leq);
            ll.insert(add.begin(), add.end());
        }
        if (leq.size() + ll.size() == before) return;
    }
}

inline Structure buildStructure(const std::vector<std::string>& universe, const PairSet& leq,
                                const PairSet& ll) {
    return Structure(universe, {leq.begin(), leq.end()}, {ll.begin(), ll.end()});
}

/// A random model of t over the given universe, grown from the base pairs.
/// Rolls back any random addition that the validator rejects.
inline Structure randomModel(const std::vector<std::string>& universe, const Theory& t, Rng& rng,
                             PairSet leq = {}, PairSet ll = {}, int tries = 12) {
    const int n = static_cast<int>(universe.size());
    if (t.P.reflexive)
        for (const auto& u : universe) leq.emplace(u, u);
    if (t.Q.reflexive)
        for (const auto& u : universe) ll.emplace(u, u);
    hornClose(leq, ll, t);

    for (int k = 0; k < tries && n > 0; ++k) {
        PairSet leq2 = leq, ll2 = ll;
        const std::string& x = universe[rng.below(n)];
        const std::string& y = universe[rng.below(n)];
        (rng.coin() ? leq2 : ll2).emplace(x, y);
        hornClose(leq2, ll2, t);
        Structure cand = buildStructure(universe, leq2, ll2);
        if (amalg::validate(cand, t).ok()) {
            leq = std::move(leq2);
            ll = std::move(ll2);
        }
    }
    Structure out = buildStructure(universe, leq, ll);
    REQUIRE(amalg::validate(out, t).ok());
    return out;
}

/// A random normalized V-formation over t with arm sizes up to maxArm.
inline VFormation randomVFormation(const Theory& t, Rng& rng, int maxArm) {
    const int cSize = rng.below(std::min(3, maxArm) + 1);
    std::vector<std::string> cLabels;
    for (int i = 0; i < cSize; ++i) cLabels.push_back("c" + std::to_string(i + 1));
    Structure c = randomModel(cLabels, t, rng, {}, {}, 6);

    auto extend = [&](const std::string& prefix) {
        int extra = rng.below(maxArm - cSize + 1);
        std::vector<std::string> labels = cLabels;
        for (int i = 0; i < extra; ++i) labels.push_back(prefix + std::to_string(i + 1));
        std::sort(labels.begin(), labels.end());
        for (int attempt = 0;; ++attempt) {
            Structure arm = randomModel(labels, t, rng, pairSet(c.leq()), pairSet(c.ll()), 10);
            if (arm.induced(cLabels) == c) return arm;
            REQUIRE(attempt < 200);
        }
    };
    VFormation v{extend("a"), extend("b"), c};
    REQUIRE(amalg::vformation_check(v).ok());
    return v;
}

/// Uniformly random admissible theory (no extras, transitive).
inline Theory randomAdmissibleTheory(Rng& rng) {
    for (;;) {
        Theory t;
        t.P.reflexive = rng.coin();
        t.P.antireflexive = !t.P.reflexive && rng.coin();
        t.P.antisymmetric = rng.coin();
        t.Q.reflexive = rng.coin();
        t.Q.antireflexive = !t.Q.reflexive && rng.coin();
        t.Q.antisymmetric = rng.coin();
        t.finer = rng.coin();
        t.coarser = rng.coin();
        t.a1 = rng.coin();
        t.a2 = rng.coin();
        try {
            amalg::construct::admissible_case(t);
            return t;
        } catch (const amalg::Inadmissible&) {
        }
    }
}

}  // namespace helpers
