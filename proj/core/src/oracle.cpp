#include "amalg/oracle.hpp"

#include <algorithm>

#include "amalg/errors.hpp"
#include "amalg/validate.hpp"
#include "engine.hpp"

namespace amalg::oracle {

namespace {

using construct::Amalgam;
using construct::AmalgamMode;
using engine::Cell;
using engine::Deadline;
using engine::LEQ;
using engine::LL;
using engine::makeCell;
using engine::State;
using engine::TriMat;
using Row = RelMat::Row;

using Matching = std::vector<std::pair<int, int>>;  // (A index, B index)

std::vector<Matching> enumerateMatchings(const std::vector<int>& aFree,
                                         const std::vector<int>& bFree) {
    std::vector<Matching> all;
    Matching cur;
    std::vector<bool> used(bFree.size(), false);
    auto rec = [&](auto&& self, size_t aPos) -> void {
        if (aPos == aFree.size()) {
            all.push_back(cur);
            return;
        }
        self(self, aPos + 1);  // leave this element unidentified
        for (size_t b = 0; b < bFree.size(); ++b) {
            if (used[b]) continue;
            used[b] = true;
            cur.emplace_back(aFree[aPos], bFree[b]);
            self(self, aPos + 1);
            cur.pop_back();
            used[b] = false;
        }
    };
    rec(rec, 0);
    std::sort(all.begin(), all.end(), [](const Matching& x, const Matching& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return all;
}

/// One candidate shape: a merged universe (identifications applied, fresh
/// points appended), arm-fixed cells, and partially resolved op tables.
struct Scenario {
    bool feasible = true;
    int n = 0;
    std::vector<std::string> labels;  // sorted
    std::vector<int> aIdx, bIdx;      // arm element index -> item index
    State init;
    std::vector<Cell> seeds;                         // initially known cells
    std::map<std::string, std::vector<int>> opBase;  // -1 on fresh items
};

Scenario buildScenario(const VFormation& v, const Theory& t, AmalgamMode mode, const Matching& mu,
                       int fresh) {
    Scenario sc;
    const Structure &A = v.A, &B = v.B, &C = v.C;

    struct ProtoItem {
        std::string label;
        int aPre = -1, bPre = -1;
    };
    std::vector<ProtoItem> proto;

    std::vector<bool> aMatched(A.size(), false), bMatched(B.size(), false);
    for (auto [ai, bi] : mu) {
        aMatched[ai] = true;
        bMatched[bi] = true;
        proto.push_back({std::min(A.label(ai), B.label(bi)), ai, bi});
    }
    for (int i = 0; i < A.size(); ++i) {
        if (aMatched[i]) continue;
        proto.push_back({A.label(i), i, B.indexOf(A.label(i))});
    }
    for (int i = 0; i < B.size(); ++i) {
        if (bMatched[i] || C.hasElement(B.label(i))) continue;
        proto.push_back({B.label(i), -1, i});
    }
    for (int f = 0; f < fresh; ++f) {
        std::string label = "@x" + std::to_string(f + 1);
        for (const auto& p : proto)
            if (p.label == label)
                throw InvalidInput("search: universe already uses the fresh label " + label);
        proto.push_back({label, -1, -1});
    }

    std::sort(proto.begin(), proto.end(),
              [](const ProtoItem& x, const ProtoItem& y) { return x.label < y.label; });

    sc.n = static_cast<int>(proto.size());
    if (sc.n > engine::kMaxItems)
        throw SizeBoundExceeded("search: candidate universe exceeds 32 elements");
    sc.aIdx.assign(A.size(), -1);
    sc.bIdx.assign(B.size(), -1);
    for (int p = 0; p < sc.n; ++p) {
        sc.labels.push_back(proto[p].label);
        if (proto[p].aPre >= 0) sc.aIdx[proto[p].aPre] = p;
        if (proto[p].bPre >= 0) sc.bIdx[proto[p].bPre] = p;
    }

    // Arm-fixed cells; both arms must agree wherever they both speak.
    for (int p = 0; p < sc.n; ++p) {
        for (int q = 0; q < sc.n; ++q) {
            for (int rel : {LEQ, LL}) {
                int truth = -1;
                if (proto[p].aPre >= 0 && proto[q].aPre >= 0) {
                    const RelMat& m = rel == LEQ ? A.leqMat() : A.llMat();
                    truth = m.get(proto[p].aPre, proto[q].aPre) ? 1 : 0;
                }
                if (proto[p].bPre >= 0 && proto[q].bPre >= 0) {
                    const RelMat& m = rel == LEQ ? B.leqMat() : B.llMat();
                    int other = m.get(proto[p].bPre, proto[q].bPre) ? 1 : 0;
                    if (truth >= 0 && truth != other) {
                        sc.feasible = false;
                        return sc;
                    }
                    truth = other;
                }
                if (truth >= 0) {
                    TriMat& m = sc.init.rel[rel];
                    m.known[p] |= Row{1} << q;
                    if (truth) m.val[p] |= Row{1} << q;
                    sc.seeds.push_back(makeCell(rel, p, q));
                }
            }
        }
    }

    // Theory-forced diagonals on the still-unknown cells.
    auto seedDiagonal = [&](int rel, bool value) {
        TriMat& m = sc.init.rel[rel];
        for (int p = 0; p < sc.n; ++p) {
            if (m.isKnown(p, p)) {
                if (m.get(p, p) != value) sc.feasible = false;
                continue;
            }
            m.known[p] |= Row{1} << p;
            if (value) m.val[p] |= Row{1} << p;
            sc.seeds.push_back(makeCell(rel, p, p));
        }
    };
    if (t.P.reflexive) seedDiagonal(LEQ, true);
    if (t.P.antireflexive) seedDiagonal(LEQ, false);
    if (t.Q.reflexive) seedDiagonal(LL, true);
    if (t.Q.antireflexive) seedDiagonal(LL, false);
    if (!sc.feasible) return sc;

    // At SUPER, a cross leq pair without an interpolant through C can never
    // hold; pin those to false up front.
    if (mode == AmalgamMode::SUPER) {
        for (int a = 0; a < A.size(); ++a) {
            if (C.hasElement(A.label(a))) continue;
            for (int b = 0; b < B.size(); ++b) {
                if (C.hasElement(B.label(b))) continue;
                bool fwd = false, bwd = false;
                for (int c = 0; c < C.size(); ++c) {
                    int ca = A.indexOf(C.label(c));
                    int cb = B.indexOf(C.label(c));
                    if (A.leqMat().get(a, ca) && B.leqMat().get(cb, b)) fwd = true;
                    if (B.leqMat().get(b, cb) && A.leqMat().get(ca, a)) bwd = true;
                }
                TriMat& m = sc.init.rel[LEQ];
                int p = sc.aIdx[a], q = sc.bIdx[b];
                if (!fwd && !m.isKnown(p, q)) {
                    m.known[p] |= Row{1} << q;
                    sc.seeds.push_back(makeCell(LEQ, p, q));
                }
                if (!bwd && !m.isKnown(q, p)) {
                    m.known[q] |= Row{1} << p;
                    sc.seeds.push_back(makeCell(LEQ, q, p));
                }
            }
        }
    }

    // Operations: resolved through the arms, undetermined on fresh points.
    for (const auto& name : A.opNames()) {
        std::vector<int> table(sc.n, -1);
        for (int p = 0; p < sc.n && sc.feasible; ++p) {
            int va = proto[p].aPre >= 0 ? sc.aIdx[A.applyOp(name, proto[p].aPre)] : -1;
            int vb = proto[p].bPre >= 0 ? sc.bIdx[B.applyOp(name, proto[p].bPre)] : -1;
            if (va >= 0 && vb >= 0 && va != vb) {
                sc.feasible = false;
                break;
            }
            table[p] = va >= 0 ? va : vb;
        }
        sc.opBase.emplace(name, std::move(table));
    }
    return sc;
}

}  // namespace

SearchResult search(const VFormation& v, const Theory& t, AmalgamMode mode,
                    const SearchConfig& cfg) {
    if (Report r = vformation_check(v); !r.ok())
        throw InvalidInput("search: input is not a normalized V-formation (" +
                           r.violations.front().axiom + ")");
    for (const auto* s : {&v.A, &v.B, &v.C})
        if (Report r = validate(*s, t); !r.ok())
            throw InvalidInput("search: a piece does not validate the theory (" +
                               r.violations.front().axiom + ")");

    Deadline deadline(cfg.timeBudgetSeconds);
    SearchResult result;
    result.stats.bound = cfg;

    std::vector<int> aFree, bFree;
    for (int i = 0; i < v.A.size(); ++i)
        if (!v.C.hasElement(v.A.label(i))) aFree.push_back(i);
    for (int i = 0; i < v.B.size(); ++i)
        if (!v.C.hasElement(v.B.label(i))) bFree.push_back(i);

    // Identifying arm elements only makes sense for plain AP: any overlap
    // beyond C breaks SAP, and SUPER subsumes SAP.
    std::vector<Matching> matchings;
    if (mode == AmalgamMode::AP && cfg.allowIdentification)
        matchings = enumerateMatchings(aFree, bFree);
    else
        matchings.push_back({});

    for (const Matching& mu : matchings) {
        for (int fresh = 0; fresh <= cfg.extraElements; ++fresh) {
            Scenario sc = buildScenario(v, t, mode, mu, fresh);
            if (!sc.feasible) continue;

            // Fresh-point op values are enumerated outermost, in name and
            // position order, so the relation search stays purely boolean.
            std::vector<std::pair<std::string, int>> opSlots;
            for (const auto& [name, table] : sc.opBase)
                for (int p = 0; p < sc.n; ++p)
                    if (table[p] < 0) opSlots.emplace_back(name, p);

            std::vector<Cell> order;
            for (int rel : {LEQ, LL})
                for (int i = 0; i < sc.n; ++i)
                    for (int j = 0; j < sc.n; ++j)
                        if (!sc.init.rel[rel].isKnown(i, j)) order.push_back(makeCell(rel, i, j));

            std::vector<int> slotVals(opSlots.size(), 0);
            for (;;) {
                auto ops = sc.opBase;
                for (size_t s = 0; s < opSlots.size(); ++s)
                    ops[opSlots[s].first][opSlots[s].second] = slotVals[s];

                engine::Engine eng;
                eng.t = &t;
                eng.ops = &ops;
                eng.n = sc.n;
                eng.nodes = &result.stats.nodesVisited;
                eng.deadline = &deadline;

                auto leaf = [&](const State& st) {
                    RelMat leqM(sc.n), llM(sc.n);
                    for (int i = 0; i < sc.n; ++i) {
                        leqM.rowRef(i) = st.rel[LEQ].trueRow(i);
                        llM.rowRef(i) = st.rel[LL].trueRow(i);
                    }
                    Amalgam w;
                    w.D = Structure::fromParts(sc.labels, leqM, llM, ops);
                    for (int i = 0; i < v.A.size(); ++i)
                        w.iota[v.A.label(i)] = sc.labels[sc.aIdx[i]];
                    for (int i = 0; i < v.B.size(); ++i)
                        w.kappa[v.B.label(i)] = sc.labels[sc.bIdx[i]];
                    if (!construct::verify(v, w, t, mode).ok()) return false;
                    result.amalgam = std::move(w);
                    return true;
                };

                State st = sc.init;
                ++result.stats.nodesVisited;
                if ((result.stats.nodesVisited & 255u) == 0) deadline.check();
                if (eng.propagate(st, sc.seeds) && eng.dfs(st, order, 0, leaf)) return result;

                // Next op completion (odometer); single pass when no slots.
                bool more = false;
                for (size_t s = opSlots.size(); s-- > 0;) {
                    if (++slotVals[s] < sc.n) {
                        more = true;
                        break;
                    }
                    slotVals[s] = 0;
                }
                if (!more) break;
            }
        }
    }
    return result;  // exhausted
}

SearchResult decide_superamalgamation_over_union(const VFormation& v, const Theory& t) {
    return search(v, t, construct::AmalgamMode::SUPER, SearchConfig{});
}

}  // namespace amalg::oracle
