#include "amalg/validate.hpp"

#include <bit>

#include "amalg/errors.hpp"

namespace amalg {

namespace {

using Row = RelMat::Row;

// A1: w leq x, x ll y => w ll y. First failing (w,x,y) in index order.
bool a1Witness(const RelMat& leq, const RelMat& ll, int& ww, int& wx, int& wy) {
    const int n = leq.size();
    for (int w = 0; w < n; ++w) {
        Row xs = leq.row(w);
        while (xs) {
            int x = std::countr_zero(xs);
            xs &= xs - 1;
            Row missing = ll.row(x) & ~ll.row(w);
            if (missing) {
                ww = w;
                wx = x;
                wy = std::countr_zero(missing);
                return true;
            }
        }
    }
    return false;
}

// A2: x ll y, y leq z => x ll z.
bool a2Witness(const RelMat& leq, const RelMat& ll, int& wx, int& wy, int& wz) {
    const int n = leq.size();
    for (int x = 0; x < n; ++x) {
        Row ys = ll.row(x);
        while (ys) {
            int y = std::countr_zero(ys);
            ys &= ys - 1;
            Row missing = leq.row(y) & ~ll.row(x);
            if (missing) {
                wx = x;
                wy = y;
                wz = std::countr_zero(missing);
                return true;
            }
        }
    }
    return false;
}

bool urquhartWitness(const RelMat& leq, const RelMat& ll, int& wx, int& wy) {
    const int n = leq.size();
    for (int x = 0; x < n; ++x) {
        Row both = leq.row(x) & ll.row(x) & ~(Row{1} << x);
        if (both) {
            wx = x;
            wy = std::countr_zero(both);
            return true;
        }
    }
    return false;
}

// (6.1): z below both x and y forces x,y comparable. Witness (x,y,z).
bool unionOfChainsWitness(const RelMat& leq, bool dual, int& wx, int& wy, int& wz) {
    const int n = leq.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            if (leq.get(x, y) || leq.get(y, x)) continue;
            for (int z = 0; z < n; ++z) {
                bool bound = dual ? (leq.get(x, z) && leq.get(y, z))
                                  : (leq.get(z, x) && leq.get(z, y));
                if (bound) {
                    wx = x;
                    wy = y;
                    wz = z;
                    return true;
                }
            }
        }
    }
    return false;
}

// Lexicographically least antichain of size k+1, as a sorted index tuple.
bool antichainWitness(const RelMat& leq, int k, std::vector<int>& witness) {
    const int n = leq.size();
    if (k + 1 > n) return false;
    std::vector<int> pick;
    auto incomparableWithAll = [&](int c) {
        for (int p : pick)
            if (leq.get(p, c) || leq.get(c, p)) return false;
        return true;
    };
    // Depth-first over increasing indices; the first full pick is lex-least.
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(pick.size()) == k + 1) return true;
        for (int c = start; c < n; ++c) {
            if (!incomparableWithAll(c)) continue;
            pick.push_back(c);
            if (self(self, c + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) {
        witness = pick;
        return true;
    }
    return false;
}

bool opPreservationWitness(const RelMat& rel, const std::vector<int>& table, int& wx, int& wy) {
    const int n = rel.size();
    for (int x = 0; x < n; ++x) {
        Row ys = rel.row(x);
        while (ys) {
            int y = std::countr_zero(ys);
            ys &= ys - 1;
            if (!rel.get(table[x], table[y])) {
                wx = x;
                wy = y;
                return true;
            }
        }
    }
    return false;
}

void relationAxioms(const RelMat& m, const RelProps& props, bool transitive,
                    const std::string& prefix, const Structure& s, Report& rep) {
    int i, j, k;
    if (transitive && m.transitivityWitness(i, j, k))
        rep.add(prefix + "TRANSITIVE", {s.label(i), s.label(j), s.label(k)});
    if (props.reflexive && m.reflexiveWitness(i)) rep.add(prefix + "REFLEXIVE", {s.label(i)});
    if (props.antireflexive && m.antireflexiveWitness(i))
        rep.add(prefix + "ANTIREFLEXIVE", {s.label(i)});
    if (props.antisymmetric && m.antisymmetryWitness(i, j))
        rep.add(prefix + "ANTISYMMETRIC", {s.label(i), s.label(j)});
}

}  // namespace

Report validate(const Structure& s, const Theory& t) {
    Report rep;
    const RelMat& leq = s.leqMat();
    const RelMat& ll = s.llMat();
    int i, j, k;

    relationAxioms(leq, t.P, t.transitive, "LEQ_", s, rep);
    relationAxioms(ll, t.Q, t.transitive, "LL_", s, rep);

    if (t.finer && ll.differenceWitness(leq, i, j)) rep.add("FINER", {s.label(i), s.label(j)});
    if (t.coarser && leq.differenceWitness(ll, i, j)) rep.add("COARSER", {s.label(i), s.label(j)});
    if (t.a1 && a1Witness(leq, ll, i, j, k))
        rep.add("A1", {s.label(i), s.label(j), s.label(k)});
    if (t.a2 && a2Witness(leq, ll, i, j, k))
        rep.add("A2", {s.label(i), s.label(j), s.label(k)});

    if (t.urquhart && urquhartWitness(leq, ll, i, j)) rep.add("U", {s.label(i), s.label(j)});
    if (t.unionOfChains) {
        if (unionOfChainsWitness(leq, false, i, j, k))
            rep.add("UNION_OF_CHAINS", {s.label(i), s.label(j), s.label(k)});
        if (unionOfChainsWitness(leq, true, i, j, k))
            rep.add("UNION_OF_CHAINS_DUAL", {s.label(i), s.label(j), s.label(k)});
    }
    if (t.maxAntichain > 0) {
        std::vector<int> ac;
        if (antichainWitness(leq, t.maxAntichain, ac)) {
            std::vector<std::string> wit;
            for (int x : ac) wit.push_back(s.label(x));
            rep.add("MAX_ANTICHAIN", std::move(wit));
        }
    }

    for (const auto& [name, sig] : t.opSig) {
        auto it = s.ops().find(name);
        if (it == s.ops().end()) {
            rep.add("OP_MISSING(" + name + ")", {});
            continue;
        }
        if (sig.leq && opPreservationWitness(leq, it->second, i, j))
            rep.add("OP_PRESERVES_LEQ(" + name + ")", {s.label(i), s.label(j)});
        if (sig.ll && opPreservationWitness(ll, it->second, i, j))
            rep.add("OP_PRESERVES_LL(" + name + ")", {s.label(i), s.label(j)});
    }
    return rep;
}

namespace detail {

bool validate_kernel(const RelMat& leq, const RelMat& ll,
                     const std::map<std::string, std::vector<int>>& ops, const Theory& t) {
    int i, j, k;
    if (t.transitive && (!leq.isTransitive() || !ll.isTransitive())) return false;
    if (t.P.reflexive && leq.reflexiveWitness(i)) return false;
    if (t.P.antireflexive && leq.antireflexiveWitness(i)) return false;
    if (t.P.antisymmetric && leq.antisymmetryWitness(i, j)) return false;
    if (t.Q.reflexive && ll.reflexiveWitness(i)) return false;
    if (t.Q.antireflexive && ll.antireflexiveWitness(i)) return false;
    if (t.Q.antisymmetric && ll.antisymmetryWitness(i, j)) return false;
    if (t.finer && !ll.subsetOf(leq)) return false;
    if (t.coarser && !leq.subsetOf(ll)) return false;
    if (t.a1 && a1Witness(leq, ll, i, j, k)) return false;
    if (t.a2 && a2Witness(leq, ll, i, j, k)) return false;
    if (t.urquhart && urquhartWitness(leq, ll, i, j)) return false;
    if (t.unionOfChains &&
        (unionOfChainsWitness(leq, false, i, j, k) || unionOfChainsWitness(leq, true, i, j, k)))
        return false;
    if (t.maxAntichain > 0) {
        std::vector<int> ac;
        if (antichainWitness(leq, t.maxAntichain, ac)) return false;
    }
    for (const auto& [name, sig] : t.opSig) {
        auto it = ops.find(name);
        if (it == ops.end()) return false;
        if (sig.leq && opPreservationWitness(leq, it->second, i, j)) return false;
        if (sig.ll && opPreservationWitness(ll, it->second, i, j)) return false;
    }
    return true;
}

}  // namespace detail

Report is_embedding(const std::map<std::string, std::string>& f, const Structure& s,
                    const Structure& tgt, const Theory& t) {
    Report rep;
    const int n = s.size();

    // Totality and codomain.
    std::vector<int> img(n, -1);
    for (int i = 0; i < n; ++i) {
        auto it = f.find(s.label(i));
        if (it == f.end()) {
            rep.add("TOTAL", {s.label(i)});
            return rep;
        }
        int j = tgt.indexOf(it->second);
        if (j < 0) {
            rep.add("CODOMAIN", {s.label(i), it->second});
            return rep;
        }
        img[i] = j;
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img[i] == img[j]) {
                rep.add("INJECTIVE", {s.label(i), s.label(j)});
                return rep;
            }

    auto relCheck = [&](const RelMat& ms, const RelMat& mt, const std::string& prefix) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                bool inS = ms.get(i, j);
                bool inT = mt.get(img[i], img[j]);
                if (inS && !inT) {
                    rep.add(prefix + "_PRESERVATION", {s.label(i), s.label(j)});
                    return;
                }
                if (!inS && inT) {
                    rep.add(prefix + "_REFLECTION", {s.label(i), s.label(j)});
                    return;
                }
            }
        }
    };
    relCheck(s.leqMat(), tgt.leqMat(), "LEQ");
    relCheck(s.llMat(), tgt.llMat(), "LL");

    // Operation signature: every op of the source (and of the signature) must
    // exist on the target and commute with f.
    std::vector<std::string> names = s.opNames();
    for (const auto& [name, _] : t.opSig)
        if (!s.hasOp(name)) names.push_back(name);
    for (const auto& name : names) {
        if (!s.hasOp(name) || !tgt.hasOp(name)) {
            rep.add("OP_SIGNATURE(" + name + ")", {});
            continue;
        }
        const auto& ts = s.ops().at(name);
        const auto& tt = tgt.ops().at(name);
        for (int i = 0; i < n; ++i) {
            if (tt[img[i]] != img[ts[i]]) {
                rep.add("OP_COMMUTES(" + name + ")", {s.label(i)});
                break;
            }
        }
    }
    return rep;
}

}  // namespace amalg
