#include "amalg/construct.hpp"

#include <algorithm>
#include <set>

#include "amalg/errors.hpp"
#include "amalg/validate.hpp"

namespace amalg::construct {

std::string to_string(AmalgamMode m) {
    switch (m) {
        case AmalgamMode::AP: return "ap";
        case AmalgamMode::SAP: return "sap";
        case AmalgamMode::SUPER: return "super";
    }
    return "?";
}

CaseTag admissible_case(const Theory& t) {
    if (!t.transitive)
        throw Inadmissible("constructive recipes require transitive relations", "transitivity");
    if (t.hasExtras())
        throw Inadmissible("theories with extra axioms route to the oracle", "extras");

    if (t.a1 && t.a2) return {CaseTag::CASE_III};
    if (!t.a1 && !t.a2) return {CaseTag::CASE_B};

    // One-sided A1/A2 needs F plus the antisymmetry side condition.
    if (!t.finer) throw Inadmissible("one-sided A1/A2 needs ll finer than leq", "c1");
    const bool c2 = t.P.antisymmetric || t.Q.antireflexive || !t.Q.antisymmetric;
    if (!c2)
        throw Inadmissible("antisymmetric ll needs antisymmetric leq or antireflexive ll", "c2");
    if (t.a2) return {CaseTag::CASE_I, true, true};
    return {CaseTag::CASE_II, true, true};
}

namespace {

std::vector<std::string> unionUniverse(const Structure& a, const Structure& b) {
    std::vector<std::string> u;
    std::set_union(a.universe().begin(), a.universe().end(), b.universe().begin(),
                   b.universe().end(), std::back_inserter(u));
    return u;
}

std::vector<int> indexMap(const Structure& from, const std::vector<std::string>& dUniverse) {
    std::vector<int> m(from.size());
    for (int i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(dUniverse.begin(), dUniverse.end(), from.label(i));
        m[i] = static_cast<int>(it - dUniverse.begin());
    }
    return m;
}

RelMat embed(const RelMat& m, const std::vector<int>& toD, int nD) {
    RelMat out(nD);
    for (int i = 0; i < m.size(); ++i) {
        RelMat::Row r = m.row(i);
        while (r) {
            int j = std::countr_zero(r);
            r &= r - 1;
            out.set(toD[i], toD[j]);
        }
    }
    return out;
}

struct UnionParts {
    std::vector<std::string> universe;
    std::vector<int> aIdx, bIdx;
    RelMat leqA, leqB, llA, llB;  // arm relations in D coordinates
};

UnionParts unionParts(const VFormation& v) {
    UnionParts p;
    p.universe = unionUniverse(v.A, v.B);
    const int nD = static_cast<int>(p.universe.size());
    p.aIdx = indexMap(v.A, p.universe);
    p.bIdx = indexMap(v.B, p.universe);
    p.leqA = embed(v.A.leqMat(), p.aIdx, nD);
    p.leqB = embed(v.B.leqMat(), p.bIdx, nD);
    p.llA = embed(v.A.llMat(), p.aIdx, nD);
    p.llB = embed(v.B.llMat(), p.bIdx, nD);
    return p;
}

RelMat fourTerm(const RelMat& ra, const RelMat& rb) {
    return ra.unionWith(rb).unionWith(ra.composeWith(rb)).unionWith(rb.composeWith(ra));
}

std::map<std::string, std::vector<int>> unionOps(const VFormation& v, const UnionParts& p) {
    std::map<std::string, std::vector<int>> ops;
    const int nD = static_cast<int>(p.universe.size());
    for (const auto& name : v.A.opNames()) {
        std::vector<int> table(nD, -1);
        for (int i = 0; i < v.A.size(); ++i)
            table[p.aIdx[i]] = p.aIdx[v.A.applyOp(name, i)];
        for (int i = 0; i < v.B.size(); ++i)
            table[p.bIdx[i]] = p.bIdx[v.B.applyOp(name, i)];
        ops.emplace(name, std::move(table));
    }
    return ops;
}

std::map<std::string, std::string> inclusion(const Structure& s) {
    std::map<std::string, std::string> m;
    for (const auto& l : s.universe()) m.emplace(l, l);
    return m;
}

void requireValidPieces(const VFormation& v, const Theory& t, const char* who) {
    if (Report r = vformation_check(v); !r.ok())
        throw InvalidInput(std::string(who) + ": input is not a normalized V-formation (" +
                           r.violations.front().axiom + ")");
    for (const auto* s : {&v.A, &v.B, &v.C}) {
        if (Report r = validate(*s, t); !r.ok())
            throw InvalidInput(std::string(who) + ": a piece does not validate the theory (" +
                               r.violations.front().axiom + ")");
    }
}

}  // namespace

BinRel amalgamate_leq(const VFormation& v) {
    if (Report r = vformation_check(v); !r.ok())
        throw InvalidInput("amalgamate_leq: input is not a normalized V-formation");
    if (!v.A.leqMat().isTransitive() || !v.B.leqMat().isTransitive())
        throw InvalidInput("amalgamate_leq: arm orders must be transitive");
    UnionParts p = unionParts(v);
    return BinRel::fromMat(p.universe, fourTerm(p.leqA, p.leqB));
}

Amalgam amalgamate(const VFormation& v, const Theory& t) {
    requireValidPieces(v, t, "amalgamate");
    const CaseTag tag = admissible_case(t);

    // Operations must be declared leq-preserving; preservation of ll alone is
    // not amalgamable (the extension can break an embedding).
    for (const auto& name : v.A.opNames()) {
        auto it = t.opSig.find(name);
        if (it == t.opSig.end() || !it->second.leq)
            throw Inadmissible("amalgamate: op " + name + " is not declared leq-preserving",
                               "opSig");
    }

    UnionParts p = unionParts(v);
    RelMat leqD = fourTerm(p.leqA, p.leqB);
    RelMat llD = fourTerm(p.llA, p.llB);
    if (tag.kind == CaseTag::CASE_III) {
        llD = llD.unionWith(p.llA.composeWith(p.leqB))
                  .unionWith(p.leqA.composeWith(p.llB))
                  .unionWith(p.llB.composeWith(p.leqA))
                  .unionWith(p.leqB.composeWith(p.llA));
    }

    Amalgam w;
    w.D = Structure::fromParts(p.universe, leqD, llD, unionOps(v, p));
    w.iota = inclusion(v.A);
    w.kappa = inclusion(v.B);

    if (Report r = verify(v, w, t, AmalgamMode::SUPER); !r.ok())
        throw VerificationFailed("amalgamate: construction failed verification", std::move(r));
    return w;
}

Report verify(const VFormation& v, const Amalgam& w, const Theory& t, AmalgamMode mode) {
    Report rep = validate(w.D, t);
    rep.absorb(is_embedding(w.iota, v.A, w.D, t), "IOTA_");
    rep.absorb(is_embedding(w.kappa, v.B, w.D, t), "KAPPA_");

    for (const auto& c : v.C.universe()) {
        auto ai = w.iota.find(c);
        auto bi = w.kappa.find(c);
        if (ai == w.iota.end() || bi == w.kappa.end() || ai->second != bi->second) {
            rep.add("AGREE_ON_C", {c});
            break;
        }
    }
    if (!rep.ok()) return rep;  // later checks assume well-formed embeddings

    // Images as D indices.
    std::vector<int> imgA(v.A.size()), imgB(v.B.size());
    for (int i = 0; i < v.A.size(); ++i) imgA[i] = w.D.indexOf(w.iota.at(v.A.label(i)));
    for (int i = 0; i < v.B.size(); ++i) imgB[i] = w.D.indexOf(w.kappa.at(v.B.label(i)));
    std::vector<int> cInA(v.C.size()), cInB(v.C.size());
    for (int i = 0; i < v.C.size(); ++i) {
        cInA[i] = v.A.indexOf(v.C.label(i));
        cInB[i] = v.B.indexOf(v.C.label(i));
    }

    if (mode == AmalgamMode::SAP || mode == AmalgamMode::SUPER) {
        std::vector<unsigned char> inA(w.D.size(), 0), inC(w.D.size(), 0);
        for (int d : imgA) inA[d] = 1;
        for (int c : cInA) inC[imgA[c]] = 1;
        for (int d : imgB)
            if (inA[d] && !inC[d]) {
                rep.add("SAP", {w.D.label(d)});
                break;
            }
    }

    if (mode == AmalgamMode::SUPER) {
        const RelMat& leqD = w.D.leqMat();
        const RelMat& leqA = v.A.leqMat();
        const RelMat& leqB = v.B.leqMat();
        for (int a = 0; a < v.A.size(); ++a) {
            if (v.C.hasElement(v.A.label(a))) continue;
            for (int b = 0; b < v.B.size(); ++b) {
                if (v.C.hasElement(v.B.label(b))) continue;
                if (leqD.get(imgA[a], imgB[b])) {
                    bool interpolated = false;
                    for (int c = 0; c < v.C.size(); ++c)
                        if (leqA.get(a, cInA[c]) && leqB.get(cInB[c], b)) {
                            interpolated = true;
                            break;
                        }
                    if (!interpolated)
                        rep.add("SUPER_INTERPOLATION", {v.A.label(a), v.B.label(b)});
                }
                if (leqD.get(imgB[b], imgA[a])) {
                    bool interpolated = false;
                    for (int c = 0; c < v.C.size(); ++c)
                        if (leqB.get(b, cInB[c]) && leqA.get(cInA[c], a)) {
                            interpolated = true;
                            break;
                        }
                    if (!interpolated)
                        rep.add("SUPER_INTERPOLATION_DUAL", {v.A.label(a), v.B.label(b)});
                }
            }
        }
    }
    return rep;
}

BinRel lift(const Structure& d, const BinRel& eleq, const Theory& t) {
    const auto& e = eleq.universe();
    for (const auto& l : d.universe())
        if (eleq.indexOf(l) < 0)
            throw NotAPosetExtension("lift: extension universe does not contain " + l);

    const RelMat& em = eleq.mat();
    int wi, wj, wk;
    if (em.reflexiveWitness(wi) || em.antisymmetryWitness(wi, wj) ||
        em.transitivityWitness(wi, wj, wk))
        throw NotAPosetExtension("lift: the extension order is not a partial order");

    const int nE = static_cast<int>(e.size());
    std::vector<int> dToE = [&] {
        std::vector<int> m(d.size());
        for (int i = 0; i < d.size(); ++i) m[i] = eleq.indexOf(d.label(i));
        return m;
    }();

    // Extension: eleq restricted to D equals leq_D.
    {
        RelMat::Row dMask = 0;
        for (int x : dToE) dMask |= RelMat::Row{1} << x;
        RelMat restricted = em.restrict(dMask);
        RelMat leqInOrder = d.leqMat();  // d universe sorted; restrict() keeps index order,
                                         // and dToE is increasing because both are sorted
        if (!(restricted == leqInOrder))
            throw NotAPosetExtension("lift: the extension disagrees with leq on the base");
    }

    if (Report r = validate(d, t); !r.ok())
        throw InvalidInput("lift: base structure does not validate the theory (" +
                           r.violations.front().axiom + ")");

    RelMat llDinE = embed(d.llMat(), dToE, nE);

    RelMat llE(nE);
    if (t.coarser) {
        llE = em.unionWith(em.composeWith(llDinE).composeWith(em));
    } else if (t.a1 && t.a2) {
        llE = em.composeWith(llDinE).composeWith(em);
    } else if (t.a2) {
        llE = llDinE.composeWith(em);
    } else if (t.a1) {
        llE = em.composeWith(llDinE);
    } else {
        llE = llDinE;
    }
    if (t.Q.reflexive)
        for (int i = 0; i < nE; ++i) llE.set(i, i);

    // The lifted relation must restrict back exactly and satisfy the theory.
    {
        RelMat::Row dMask = 0;
        for (int x : dToE) dMask |= RelMat::Row{1} << x;
        if (!(llE.restrict(dMask) == d.llMat())) {
            Report r;
            r.add("LL_RESTRICTION", {});
            throw VerificationFailed("lift: lifted relation does not restrict to the base",
                                     std::move(r));
        }
    }
    Structure lifted = Structure::fromParts(e, em, llE);
    if (Report r = validate(lifted, t); !r.ok())
        throw VerificationFailed("lift: lifted structure does not validate the theory",
                                 std::move(r));
    return BinRel::fromMat(e, llE);
}

Amalgam expand_superamalgam(const VFormation& v, const BinRel& eleq, const Theory& t) {
    if (!v.A.opNames().empty())
        throw InvalidInput("expand_superamalgam does not support operations");

    // The poset regime: leq is implicitly a reflexive antisymmetric order, so
    // the one-sided cases need only F.
    Theory tp = t;
    tp.P.reflexive = true;
    tp.P.antisymmetric = true;

    requireValidPieces(v, tp, "expand_superamalgam");

    for (const auto& l : unionUniverse(v.A, v.B))
        if (eleq.indexOf(l) < 0)
            throw InvalidInput("expand_superamalgam: extension universe does not contain " + l);

    const RelMat& em = eleq.mat();
    int wi, wj, wk;
    if (em.reflexiveWitness(wi) || em.antisymmetryWitness(wi, wj) ||
        em.transitivityWitness(wi, wj, wk))
        throw NotASuperamalgam("expand_superamalgam: the given order is not a partial order");

    auto restrictTo = [&](const Structure& s) {
        RelMat::Row mask = 0;
        for (const auto& l : s.universe()) mask |= RelMat::Row{1} << eleq.indexOf(l);
        return em.restrict(mask);
    };
    if (!(restrictTo(v.A) == v.A.leqMat()) || !(restrictTo(v.B) == v.B.leqMat()))
        throw NotASuperamalgam("expand_superamalgam: the given order does not extend the arms");

    // Interpolation of cross pairs through C, in both directions.
    for (const auto& a : v.A.universe()) {
        if (v.C.hasElement(a)) continue;
        for (const auto& b : v.B.universe()) {
            if (v.C.hasElement(b)) continue;
            if (eleq.contains(a, b)) {
                bool ok = false;
                for (const auto& c : v.C.universe())
                    if (v.A.leq().contains(a, c) && v.B.leq().contains(c, b)) ok = true;
                if (!ok)
                    throw NotASuperamalgam("expand_superamalgam: cross pair (" + a + "," + b +
                                           ") has no interpolant in C");
            }
            if (eleq.contains(b, a)) {
                bool ok = false;
                for (const auto& c : v.C.universe())
                    if (v.B.leq().contains(b, c) && v.A.leq().contains(c, a)) ok = true;
                if (!ok)
                    throw NotASuperamalgam("expand_superamalgam: cross pair (" + b + "," + a +
                                           ") has no interpolant in C");
            }
        }
    }

    Amalgam base = amalgamate(v, tp);

    // Superamalgamation pins the order on the union; the extension must agree.
    {
        RelMat::Row mask = 0;
        for (const auto& l : base.D.universe()) mask |= RelMat::Row{1} << eleq.indexOf(l);
        if (!(em.restrict(mask) == base.D.leqMat()))
            throw NotASuperamalgam(
                "expand_superamalgam: the order on the union disagrees with the "
                "composition union");
    }

    BinRel llE = lift(base.D, eleq, tp);

    Amalgam w;
    w.D = Structure::fromParts(eleq.universe(), em, llE.mat());
    w.iota = inclusion(v.A);
    w.kappa = inclusion(v.B);
    if (Report r = verify(v, w, tp, AmalgamMode::SUPER); !r.ok())
        throw VerificationFailed("expand_superamalgam: expansion failed verification",
                                 std::move(r));
    return w;
}

BinRel szpilrajn(const BinRel& r) {
    {
        Report rep = check_rel_props(r, {.reflexive = true, .antisymmetric = true});
        if (!rep.ok())
            throw NotAPartialOrder("szpilrajn: input is not a partial order", std::move(rep));
    }
    const int n = r.size();
    const RelMat& m = r.mat();

    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool minimal = true;
            for (int y = 0; y < n && minimal; ++y)
                if (!used[y] && y != x && m.get(y, x)) minimal = false;
            if (minimal) {
                order.push_back(x);
                used[x] = true;
                break;
            }
        }
    }

    RelMat lin(n);
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i; j < order.size(); ++j) lin.set(order[i], order[j]);
    return BinRel::fromMat(r.universe(), lin);
}

Amalgam linearize_pipeline(const VFormation& v, const Theory& t) {
    requireValidPieces(v, t, "linearize_pipeline");

    for (const auto* s : {&v.A, &v.B, &v.C}) {
        const RelMat& leq = s->leqMat();
        const RelMat& ll = s->llMat();
        int i, j, k;
        if (leq.reflexiveWitness(i) || leq.antisymmetryWitness(i, j) ||
            leq.transitivityWitness(i, j, k))
            throw InvalidInput("linearize_pipeline: leq must be a partial order in every piece");
        if (!leq.subsetOf(ll))
            throw InvalidInput("linearize_pipeline: ll must be coarser than leq");
        if (ll.reflexiveWitness(i) || ll.antisymmetryWitness(i, j) ||
            ll.transitivityWitness(i, j, k))
            throw InvalidInput("linearize_pipeline: ll must be a partial order in every piece");
        for (int x = 0; x < s->size(); ++x)
            for (int y = 0; y < s->size(); ++y)
                if (!ll.get(x, y) && !ll.get(y, x))
                    throw InvalidInput("linearize_pipeline: ll must be linear in every piece");
    }

    Amalgam base = amalgamate(v, t);
    BinRel llF = szpilrajn(base.D.ll());

    Amalgam w;
    w.D = Structure::fromParts(base.D.universe(), base.D.leqMat(), llF.mat(),
                               base.D.ops());
    w.iota = base.iota;
    w.kappa = base.kappa;
    if (Report r = verify(v, w, t, AmalgamMode::SUPER); !r.ok())
        throw VerificationFailed("linearize_pipeline: linearized amalgam failed verification",
                                 std::move(r));
    return w;
}

Amalgam free_amalgamate(const VFormation& v, const Theory& t) {
    if (t.transitive)
        throw TheoryRequiresTransitivity(
            "free_amalgamate serves theories without transitivity; this one requires it");
    requireValidPieces(v, t, "free_amalgamate");

    UnionParts p = unionParts(v);
    Amalgam w;
    w.D = Structure::fromParts(p.universe, p.leqA.unionWith(p.leqB), p.llA.unionWith(p.llB),
                               unionOps(v, p));
    w.iota = inclusion(v.A);
    w.kappa = inclusion(v.B);
    if (Report r = verify(v, w, t, AmalgamMode::SAP); !r.ok())
        throw VerificationFailed("free_amalgamate: union amalgam failed verification",
                                 std::move(r));
    return w;
}

}  // namespace amalg::construct
