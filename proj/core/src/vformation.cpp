#include "amalg/vformation.hpp"

#include <algorithm>
#include <set>

#include "amalg/errors.hpp"
#include "amalg/validate.hpp"

namespace amalg {

Report vformation_check(const VFormation& v) {
    Report rep;

    // universe(C) = universe(A) ∩ universe(B), and no sharing outside C.
    std::vector<std::string> inter;
    std::set_intersection(v.A.universe().begin(), v.A.universe().end(), v.B.universe().begin(),
                          v.B.universe().end(), std::back_inserter(inter));
    if (inter != v.C.universe()) {
        rep.add("OVERLAP_IS_C", inter);
        return rep;
    }

    auto inducedCheck = [&](const Structure& arm, const char* which) {
        if (arm.opNames() != v.C.opNames()) {
            rep.add(std::string("OP_SIGNATURE_") + which, {});
            return;
        }
        Structure ind;
        try {
            ind = arm.induced(v.C.universe());
        } catch (const InvalidInput&) {
            rep.add(std::string("C_CLOSED_UNDER_OPS_") + which, {});
            return;
        }
        if (!(ind == v.C)) rep.add(std::string("C_INDUCED_IN_") + which, {});
    };
    inducedCheck(v.A, "A");
    inducedCheck(v.B, "B");
    return rep;
}

namespace {

std::map<std::string, std::string> invert(const std::map<std::string, std::string>& m) {
    std::map<std::string, std::string> inv;
    for (const auto& [k, v] : m) inv.emplace(v, k);
    return inv;
}

/// Relabels a structure by a total label map.
Structure relabel(const Structure& s, const std::map<std::string, std::string>& to) {
    std::vector<std::string> universe;
    universe.reserve(s.size());
    for (const auto& l : s.universe()) universe.push_back(to.at(l));

    std::vector<LabelPair> leqPairs, llPairs;
    for (auto& [x, y] : s.leq().pairs()) leqPairs.emplace_back(to.at(x), to.at(y));
    for (auto& [x, y] : s.ll().pairs()) llPairs.emplace_back(to.at(x), to.at(y));

    std::map<std::string, OpTable> ops;
    for (const auto& name : s.opNames()) {
        OpTable table;
        for (const auto& l : s.universe()) table[to.at(l)] = to.at(s.applyOp(name, l));
        ops.emplace(name, std::move(table));
    }
    return Structure(std::move(universe), leqPairs, llPairs, ops);
}

}  // namespace

NormalizedInstance normalize_instance(const Structure& A, const Structure& B, const Structure& C,
                                      const std::map<std::string, std::string>& i1,
                                      const std::map<std::string, std::string>& k1,
                                      const Theory& t) {
    if (Report r = is_embedding(i1, C, A, t); !r.ok())
        throw NotAnEmbedding("normalize_instance: i1 is not an embedding C -> A", std::move(r));
    if (Report r = is_embedding(k1, C, B, t); !r.ok())
        throw NotAnEmbedding("normalize_instance: k1 is not an embedding C -> B", std::move(r));

    auto i1inv = invert(i1);
    auto k1inv = invert(k1);

    std::map<std::string, std::string> aMap, bMap;
    for (const auto& l : A.universe()) {
        auto it = i1inv.find(l);
        aMap[l] = (it != i1inv.end()) ? it->second : l + "@a";
    }
    for (const auto& l : B.universe()) {
        auto it = k1inv.find(l);
        bMap[l] = (it != k1inv.end()) ? it->second : l + "@b";
    }

    auto distinct = [](const std::map<std::string, std::string>& m) {
        std::set<std::string> seen;
        for (const auto& [_, v] : m)
            if (!seen.insert(v).second) return false;
        return true;
    };
    if (!distinct(aMap) || !distinct(bMap))
        throw InvalidInput("normalize_instance: deterministic renaming collides; relabel inputs");

    NormalizedInstance out;
    out.v = VFormation{relabel(A, aMap), relabel(B, bMap), C};
    out.aMap = std::move(aMap);
    out.bMap = std::move(bMap);
    if (Report r = vformation_check(out.v); !r.ok())
        throw InvalidInput("normalize_instance: renamed copy violates the V-formation shape");
    return out;
}

}  // namespace amalg
