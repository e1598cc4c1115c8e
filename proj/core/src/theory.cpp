#include "amalg/theory.hpp"

namespace amalg {

std::vector<std::string> Theory::notes() const {
    std::vector<std::string> out;
    if (finer && coarser) out.push_back("F and C together force ll = leq");
    if (Q.reflexive && (a1 || a2))
        out.push_back("reflexive ll with A1 or A2 entails C (ll coarser than leq)");
    if (P.reflexive && Q.antireflexive && coarser)
        out.push_back("reflexive leq, antireflexive ll and C admit only the empty structure");
    if (P.reflexive && P.antireflexive)
        out.push_back("P demands reflexive and antireflexive: only the empty structure");
    if (Q.reflexive && Q.antireflexive)
        out.push_back("Q demands reflexive and antireflexive: only the empty structure");
    if (Q.reflexive && P.antireflexive && finer)
        out.push_back("reflexive ll, antireflexive leq and F admit only the empty structure");
    return out;
}

Theory posetTheory() {
    Theory t;
    t.P = {.reflexive = true, .antisymmetric = true};
    t.finer = true;
    t.coarser = true;
    return t;
}

Theory posetWithCoarserOrderTheory() {
    Theory t;
    t.P = {.reflexive = true, .antisymmetric = true};
    t.Q = {.reflexive = true, .antisymmetric = true};
    t.coarser = true;
    return t;
}

Theory auxiliaryRelationTheory() {
    Theory t;
    t.P = {.reflexive = true, .antisymmetric = true};
    t.finer = true;
    t.a1 = true;
    t.a2 = true;
    return t;
}

Theory causalSpaceTheory() {
    Theory t = auxiliaryRelationTheory();
    t.Q.antireflexive = true;
    return t;
}

Theory urquhartTheory(bool transitive) {
    Theory t;
    t.P = {.reflexive = true};
    t.Q = {.reflexive = true};
    t.urquhart = true;
    t.transitive = transitive;
    return t;
}

}  // namespace amalg
