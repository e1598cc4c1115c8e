#pragma once

// Internal propagation/backtracking engine shared by the oracle search and the
// model enumerator. Not installed.

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "amalg/errors.hpp"
#include "amalg/relmat.hpp"
#include "amalg/theory.hpp"

namespace amalg::engine {

using Row = RelMat::Row;

constexpr int kMaxItems = 32;

struct Deadline {
    explicit Deadline(double seconds) {
        if (seconds > 0)
            at = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
    }
    void check() const {
        if (at && std::chrono::steady_clock::now() > *at)
            throw TimeBudgetExceeded("search: time budget exceeded");
    }
    std::optional<std::chrono::steady_clock::time_point> at;
};

/// Three-state cell matrix: a cell is decided when its `known` bit is set.
struct TriMat {
    std::array<Row, kMaxItems> known{}, val{};

    bool isKnown(int i, int j) const { return (known[i] >> j) & 1u; }
    bool get(int i, int j) const { return (val[i] >> j) & 1u; }
    Row trueRow(int i) const { return known[i] & val[i]; }
};

enum Rel : int { LEQ = 0, LL = 1 };

struct State {
    TriMat rel[2];
};

struct Cell {
    std::uint16_t rel, i, j;
};

inline Cell makeCell(int rel, int i, int j) {
    return {static_cast<std::uint16_t>(rel), static_cast<std::uint16_t>(i),
            static_cast<std::uint16_t>(j)};
}

/// Forward-chaining propagation of the theory axioms over decided cells plus
/// depth-first search over the undecided ones. Every forcing is a logical
/// consequence of the current decisions, so pruning never loses a model;
/// leaves are re-checked in full by the caller's leaf callback.
struct Engine {
    const Theory* t = nullptr;
    const std::map<std::string, std::vector<int>>* ops = nullptr;  // fully resolved tables
    int n = 0;
    std::uint64_t* nodes = nullptr;
    const Deadline* deadline = nullptr;

    bool force(State& st, int rel, int i, int j, bool v, std::vector<Cell>& wl) const {
        TriMat& m = st.rel[rel];
        const Row bit = Row{1} << j;
        if (m.known[i] & bit) return ((m.val[i] >> j) & 1u) == static_cast<Row>(v);
        m.known[i] |= bit;
        if (v) m.val[i] |= bit;
        wl.push_back(makeCell(rel, i, j));
        return true;
    }

    bool applyRules(State& st, const Cell& c, std::vector<Cell>& wl) const {
        const int i = c.i, j = c.j;
        const bool v = st.rel[c.rel].get(i, j);
        TriMat& leq = st.rel[LEQ];
        TriMat& ll = st.rel[LL];

        auto closeTransitive = [&](int r) {
            TriMat& m = st.rel[r];
            Row succ = m.trueRow(j);
            while (succ) {
                int z = std::countr_zero(succ);
                succ &= succ - 1;
                if (!force(st, r, i, z, true, wl)) return false;
            }
            for (int z = 0; z < n; ++z)
                if (m.isKnown(z, i) && m.get(z, i) && !force(st, r, z, j, true, wl)) return false;
            return true;
        };

        if (c.rel == LEQ && v) {
            if (t->transitive && !closeTransitive(LEQ)) return false;
            if (t->P.antisymmetric && i != j && !force(st, LEQ, j, i, false, wl)) return false;
            if (t->coarser && !force(st, LL, i, j, true, wl)) return false;
            if (t->a1) {  // (i,j) = (w,x): known ll(x,y) forces ll(w,y)
                Row ys = ll.trueRow(j);
                while (ys) {
                    int y = std::countr_zero(ys);
                    ys &= ys - 1;
                    if (!force(st, LL, i, y, true, wl)) return false;
                }
            }
            if (t->a2) {  // (i,j) = (y,z): known ll(x,y) forces ll(x,z)
                for (int x = 0; x < n; ++x)
                    if (ll.isKnown(x, i) && ll.get(x, i) && !force(st, LL, x, j, true, wl))
                        return false;
            }
            if (t->urquhart && i != j && !force(st, LL, i, j, false, wl)) return false;
            for (const auto& [name, sig] : t->opSig) {
                if (!sig.leq) continue;
                const auto& f = ops->at(name);
                if (!force(st, LEQ, f[i], f[j], true, wl)) return false;
            }
        } else if (c.rel == LEQ && !v) {
            if (t->finer && !force(st, LL, i, j, false, wl)) return false;
            for (const auto& [name, sig] : t->opSig) {
                if (!sig.leq) continue;
                const auto& f = ops->at(name);
                for (int x = 0; x < n; ++x) {
                    if (f[x] != i) continue;
                    for (int y = 0; y < n; ++y)
                        if (f[y] == j && !force(st, LEQ, x, y, false, wl)) return false;
                }
            }
        } else if (c.rel == LL && v) {
            if (t->transitive && !closeTransitive(LL)) return false;
            if (t->Q.antisymmetric && i != j && !force(st, LL, j, i, false, wl)) return false;
            if (t->finer && !force(st, LEQ, i, j, true, wl)) return false;
            if (t->a1) {  // (i,j) = (x,y): known leq(w,x) forces ll(w,y)
                for (int w = 0; w < n; ++w)
                    if (leq.isKnown(w, i) && leq.get(w, i) && !force(st, LL, w, j, true, wl))
                        return false;
            }
            if (t->a2) {  // (i,j) = (x,y): known leq(y,z) forces ll(x,z)
                Row zs = leq.trueRow(j);
                while (zs) {
                    int z = std::countr_zero(zs);
                    zs &= zs - 1;
                    if (!force(st, LL, i, z, true, wl)) return false;
                }
            }
            if (t->urquhart && i != j && !force(st, LEQ, i, j, false, wl)) return false;
            for (const auto& [name, sig] : t->opSig) {
                if (!sig.ll) continue;
                const auto& f = ops->at(name);
                if (!force(st, LL, f[i], f[j], true, wl)) return false;
            }
        } else {  // LL false
            if (t->coarser && !force(st, LEQ, i, j, false, wl)) return false;
            for (const auto& [name, sig] : t->opSig) {
                if (!sig.ll) continue;
                const auto& f = ops->at(name);
                for (int x = 0; x < n; ++x) {
                    if (f[x] != i) continue;
                    for (int y = 0; y < n; ++y)
                        if (f[y] == j && !force(st, LL, x, y, false, wl)) return false;
                }
            }
        }
        return true;
    }

    /// Disjunction watches for the union-of-chains sentence; a decided
    /// violation is a conflict, a half-decided one forces the other disjunct.
    bool chainScan(State& st, std::vector<Cell>& wl, bool& changed) const {
        const TriMat& leq = st.rel[LEQ];
        for (int x = 0; x < n; ++x) {
            for (int y = x + 1; y < n; ++y) {
                for (int dual = 0; dual < 2; ++dual) {
                    bool bound = false;
                    for (int z = 0; z < n && !bound; ++z) {
                        bool zx = dual ? (leq.isKnown(x, z) && leq.get(x, z))
                                       : (leq.isKnown(z, x) && leq.get(z, x));
                        bool zy = dual ? (leq.isKnown(y, z) && leq.get(y, z))
                                       : (leq.isKnown(z, y) && leq.get(z, y));
                        bound = zx && zy;
                    }
                    if (!bound) continue;
                    bool xyK = leq.isKnown(x, y), xyV = xyK && leq.get(x, y);
                    bool yxK = leq.isKnown(y, x), yxV = yxK && leq.get(y, x);
                    if (xyV || yxV) continue;
                    if (xyK && yxK) return false;
                    if (xyK && !yxK) {
                        if (!force(st, LEQ, y, x, true, wl)) return false;
                        changed = true;
                    } else if (yxK && !xyK) {
                        if (!force(st, LEQ, x, y, true, wl)) return false;
                        changed = true;
                    }
                }
            }
        }
        return true;
    }

    /// Conflict once k+1 elements are pairwise decided-incomparable.
    bool antichainScan(const State& st) const {
        const int k = t->maxAntichain;
        const TriMat& leq = st.rel[LEQ];
        std::vector<int> pick;
        auto incompatible = [&](int a, int b) {
            return leq.isKnown(a, b) && !leq.get(a, b) && leq.isKnown(b, a) && !leq.get(b, a);
        };
        auto rec = [&](auto&& self, int start) -> bool {
            if (static_cast<int>(pick.size()) == k + 1) return true;
            for (int c = start; c < n; ++c) {
                bool ok = true;
                for (int p : pick)
                    if (!incompatible(p, c)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                pick.push_back(c);
                if (self(self, c + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        return !rec(rec, 0);
    }

    bool propagate(State& st, std::vector<Cell> wl) const {
        for (;;) {
            while (!wl.empty()) {
                Cell c = wl.back();
                wl.pop_back();
                if (!applyRules(st, c, wl)) return false;
            }
            bool changed = false;
            if (t->unionOfChains && !chainScan(st, wl, changed)) return false;
            if (t->maxAntichain > 0 && !antichainScan(st)) return false;
            if (!changed) break;
        }
        return true;
    }

    /// Explores undecided cells in the order given, false before true. The
    /// leaf callback returns true to stop the search (witness accepted).
    bool dfs(const State& st, const std::vector<Cell>& order, size_t from,
             const std::function<bool(const State&)>& leaf) const {
        size_t idx = from;
        while (idx < order.size() && st.rel[order[idx].rel].isKnown(order[idx].i, order[idx].j))
            ++idx;
        if (idx == order.size()) return leaf(st);

        const Cell c = order[idx];
        for (bool v : {false, true}) {
            if ((++*nodes & 1023u) == 0 && deadline) deadline->check();
            State next = st;
            std::vector<Cell> wl;
            if (!force(next, c.rel, c.i, c.j, v, wl)) continue;
            if (!propagate(next, std::move(wl))) continue;
            if (dfs(next, order, idx + 1, leaf)) return true;
        }
        return false;
    }
};

}  // namespace amalg::engine
