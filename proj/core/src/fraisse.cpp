#include "amalg/fraisse.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "amalg/canonical.hpp"
#include "amalg/errors.hpp"
#include "amalg/validate.hpp"
#include "engine.hpp"

namespace amalg::fraisse {

namespace {

using construct::AmalgamMode;
using engine::Cell;
using engine::LEQ;
using engine::LL;
using engine::makeCell;
using engine::State;
using Row = RelMat::Row;

std::vector<std::string> canonicalLabels(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
    return labels;
}

/// Size-k index subsets of 0..n-1 in lexicographic order.
template <typename Fn>
void forEachCombination(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<Structure> enumerate_models(const Theory& t, int n) {
    if (n < 0) throw InvalidInput("enumerate_models: negative size");
    if (n > kEnumerateMaxSize)
        throw SizeBoundExceeded("enumerate_models supports universes up to 6 elements");
    if (!t.opSig.empty())
        throw InvalidInput("enumerate_models: theories with operations are not enumerable");

    if (n == 0) return {Structure{}};
    if (t.P.reflexive && t.P.antireflexive) return {};  // satisfiable only when empty
    if (t.Q.reflexive && t.Q.antireflexive) return {};

    State init;
    std::vector<Cell> seeds;
    auto seedDiagonal = [&](int rel, bool value) {
        for (int p = 0; p < n; ++p) {
            init.rel[rel].known[p] |= Row{1} << p;
            if (value) init.rel[rel].val[p] |= Row{1} << p;
            seeds.push_back(makeCell(rel, p, p));
        }
    };
    if (t.P.reflexive) seedDiagonal(LEQ, true);
    if (t.P.antireflexive) seedDiagonal(LEQ, false);
    if (t.Q.reflexive) seedDiagonal(LL, true);
    if (t.Q.antireflexive) seedDiagonal(LL, false);

    std::vector<Cell> order;
    for (int rel : {LEQ, LL})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!init.rel[rel].isKnown(i, j)) order.push_back(makeCell(rel, i, j));

    std::map<std::string, std::vector<int>> noOps;
    std::uint64_t nodes = 0;
    engine::Engine eng;
    eng.t = &t;
    eng.ops = &noOps;
    eng.n = n;
    eng.nodes = &nodes;

    std::set<std::string> keys;
    auto leaf = [&](const State& st) {
        RelMat leq(n), ll(n);
        for (int i = 0; i < n; ++i) {
            leq.rowRef(i) = st.rel[LEQ].trueRow(i);
            ll.rowRef(i) = st.rel[LL].trueRow(i);
        }
        if (detail::validate_kernel(leq, ll, noOps, t))
            keys.insert(detail::canonical_key(n, leq, ll, noOps));
        return false;  // keep enumerating
    };

    State st = init;
    if (eng.propagate(st, seeds)) eng.dfs(st, order, 0, leaf);

    // Decode each canonical key back into its representative.
    std::vector<Structure> models;
    const auto labels = canonicalLabels(n);
    for (const auto& key : keys) {
        RelMat leq(n), ll(n);
        for (int i = 0; i < n; ++i) {
            leq.rowRef(i) = static_cast<unsigned char>(key[1 + i]);
            ll.rowRef(i) = static_cast<unsigned char>(key[1 + n + i]);
        }
        models.push_back(Structure::fromParts(labels, leq, ll));
    }
    return models;
}

namespace {

/// Relabel a structure by assigning new labels positionally.
Structure relabeled(const Structure& s, const std::vector<std::string>& newLabelByOldIndex) {
    const int n = s.size();
    std::vector<std::pair<std::string, int>> order;
    order.reserve(n);
    for (int i = 0; i < n; ++i) order.emplace_back(newLabelByOldIndex[i], i);
    std::sort(order.begin(), order.end());

    std::vector<std::string> labels;
    std::vector<int> oldOf(n), newOf(n);
    for (int p = 0; p < n; ++p) {
        labels.push_back(order[p].first);
        oldOf[p] = order[p].second;
        newOf[order[p].second] = p;
    }
    RelMat leq(n), ll(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (s.leqMat().get(oldOf[p], oldOf[q])) leq.set(p, q);
            if (s.llMat().get(oldOf[p], oldOf[q])) ll.set(p, q);
        }
    std::map<std::string, std::vector<int>> ops;
    for (const auto& [name, table] : s.ops()) {
        std::vector<int> tnew(n);
        for (int p = 0; p < n; ++p) tnew[p] = newOf[table[oldOf[p]]];
        ops.emplace(name, std::move(tnew));
    }
    return Structure::fromParts(std::move(labels), leq, ll, std::move(ops));
}

/// All isomorphisms from `a` onto `b` as index maps.
std::vector<std::vector<int>> allIsomorphisms(const Structure& a, const Structure& b) {
    std::vector<std::vector<int>> out;
    if (a.size() != b.size()) return out;
    const int n = a.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (a.leqMat().get(i, j) != b.leqMat().get(perm[i], perm[j]) ||
                    a.llMat().get(i, j) != b.llMat().get(perm[i], perm[j]))
                    ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

ApCheckReport check_ap_at_size(const Theory& t, int n, AmalgamMode mode) {
    if (n < 0 || n > kEnumerateMaxSize)
        throw SizeBoundExceeded("check_ap_at_size supports arm sizes up to 6");
    ApCheckReport report;

    std::vector<Structure> models;
    for (int k = 0; k <= n; ++k) {
        auto ms = enumerate_models(t, k);
        models.insert(models.end(), ms.begin(), ms.end());
    }

    bool admissible = true;
    try {
        construct::admissible_case(t);
    } catch (const Inadmissible&) {
        admissible = false;
    }

    // Group arms by the canonical class of the chosen common part.
    struct Arm {
        const Structure* model;
        std::vector<int> embed;  // representative index -> model element index
    };
    struct Slot {
        Structure cRep;
        std::vector<std::vector<int>> auts;
        std::vector<Arm> arms;
    };
    std::vector<Slot> slots;
    std::map<std::string, size_t> slotOf;

    for (const auto& m : models) {
        for (int size = 0; size <= m.size(); ++size) {
            forEachCombination(m.size(), size, [&](const std::vector<int>& elems) {
                Row mask = 0;
                for (int e : elems) mask |= Row{1} << e;
                Structure cInd = m.induced(mask);
                std::string key =
                    detail::canonical_key(cInd.size(), cInd.leqMat(), cInd.llMat(), cInd.ops());
                auto [it, inserted] = slotOf.try_emplace(key, slots.size());
                if (inserted) {
                    Slot slot;
                    slot.cRep = cInd;
                    slot.auts = allIsomorphisms(cInd, cInd);
                    slots.push_back(std::move(slot));
                }
                Slot& slot = slots[it->second];

                // One embedding per coset of Aut(rep): each gluing built once.
                auto isos = allIsomorphisms(slot.cRep, cInd);
                std::set<std::vector<int>> kept;
                for (const auto& iso : isos) {
                    std::vector<int> least = iso;
                    for (const auto& a : slot.auts) {
                        std::vector<int> composed(iso.size());
                        for (size_t i = 0; i < iso.size(); ++i) composed[i] = iso[a[i]];
                        least = std::min(least, composed);
                    }
                    if (!kept.insert(least).second) continue;
                    std::vector<int> embed(least.size());
                    for (size_t i = 0; i < least.size(); ++i) embed[i] = elems[least[i]];
                    slot.arms.push_back({&m, embed});
                }
            });
        }
    }

    oracle::SearchConfig apCfg;
    apCfg.allowIdentification = true;
    apCfg.extraElements = 1;

    // Glue every ordered pair of arms over every common part.
    for (const auto& slot : slots) {
        const int k = slot.cRep.size();
        std::vector<std::string> cLabels;
        for (int i = 0; i < k; ++i) cLabels.push_back("c" + std::to_string(i + 1));
        Structure c = relabeled(slot.cRep, cLabels);

        for (const auto& armA : slot.arms) {
            std::vector<std::string> newA(armA.model->size());
            for (int i = 0, fresh = 0; i < armA.model->size(); ++i) {
                auto at = std::find(armA.embed.begin(), armA.embed.end(), i);
                newA[i] = at == armA.embed.end() ? "x" + std::to_string(++fresh)
                                                 : cLabels[at - armA.embed.begin()];
            }
            Structure a = relabeled(*armA.model, newA);

            for (const auto& armB : slot.arms) {
                std::vector<std::string> newB(armB.model->size());
                for (int i = 0, fresh = 0; i < armB.model->size(); ++i) {
                    auto at = std::find(armB.embed.begin(), armB.embed.end(), i);
                    newB[i] = at == armB.embed.end() ? "y" + std::to_string(++fresh)
                                                     : cLabels[at - armB.embed.begin()];
                }
                VFormation v{a, relabeled(*armB.model, newB), c};
                ++report.instances;
                if (admissible) {
                    try {
                        construct::Amalgam w = construct::amalgamate(v, t);
                        // amalgamate verified at SUPER already; re-check at the
                        // requested mode on a deterministic subsample.
                        if ((report.instances & 15u) == 0 &&
                            !construct::verify(v, w, t, mode).ok()) {
                            report.ok = false;
                            report.failures.push_back({v, oracle::SearchResult{}});
                        }
                    } catch (const Error&) {
                        report.ok = false;
                        report.failures.push_back({v, oracle::SearchResult{}});
                    }
                } else {
                    oracle::SearchResult r = oracle::search(
                        v, t, mode, mode == AmalgamMode::AP ? apCfg : oracle::SearchConfig{});
                    if (!r.isWitness()) {
                        report.ok = false;
                        report.failures.push_back({v, std::move(r)});
                    }
                }
            }
        }
    }
    return report;
}

SaturateResult saturate(const Structure& m0, const Theory& t, int s, int budget) {
    if (Report r = validate(m0, t); !r.ok())
        throw InvalidInput("saturate: the seed does not validate the theory (" +
                           r.violations.front().axiom + ")");
    construct::admissible_case(t);  // growth goes through the verified constructor
    if (!t.opSig.empty() || !m0.opNames().empty())
        throw InvalidInput("saturate: theories with operations are not supported");
    if (budget < m0.size()) throw InvalidInput("saturate: budget below the seed size");
    if (budget > RelMat::kMax) throw SizeBoundExceeded("saturate: budget exceeds 64 elements");
    if (s < 0 || s > 3) throw InvalidInput("saturate: substructure bound must be 0..3");

    SaturateResult out;
    out.m = m0;

    // Extension patterns for the new point over a k-subset, bit layout
    // [leq(x,c_i)] [leq(c_i,x)] [leq(x,x)] then the same for ll. Valid
    // patterns depend only on the induced matrices, so cache by them.
    struct TypeList {
        std::vector<std::pair<Row, Row>> patterns;
    };
    std::unordered_map<std::string, TypeList> cache;
    std::map<std::string, std::vector<int>> noOps;

    auto typesFor = [&](const Structure& sub) -> const TypeList& {
        const int k = sub.size();
        std::string key(1, static_cast<char>(k));
        for (int i = 0; i < k; ++i) {
            key.push_back(static_cast<char>(sub.leqMat().row(i)));
            key.push_back(static_cast<char>(sub.llMat().row(i)));
        }
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;

        TypeList list;
        const int bits = 2 * k + 1;
        for (Row pat = 0; pat < (Row{1} << (2 * bits)); ++pat) {
            const Row pLeq = pat & ((Row{1} << bits) - 1);
            const Row pLl = pat >> bits;
            RelMat leq(k + 1), ll(k + 1);
            for (int i = 0; i < k; ++i) {
                leq.rowRef(i) = sub.leqMat().row(i);
                ll.rowRef(i) = sub.llMat().row(i);
            }
            auto place = [&](RelMat& m, Row p) {
                for (int i = 0; i < k; ++i) {
                    if ((p >> i) & 1u) m.set(k, i);
                    if ((p >> (k + i)) & 1u) m.set(i, k);
                }
                if ((p >> (2 * k)) & 1u) m.set(k, k);
            };
            place(leq, pLeq);
            place(ll, pLl);
            if (detail::validate_kernel(leq, ll, noOps, t)) list.patterns.emplace_back(pLeq, pLl);
        }
        return cache.emplace(std::move(key), std::move(list)).first->second;
    };

    auto realizes = [&](const Structure& m, const std::vector<int>& elems, Row pLeq, Row pLl) {
        const int k = static_cast<int>(elems.size());
        for (int cand = 0; cand < m.size(); ++cand) {
            if (std::find(elems.begin(), elems.end(), cand) != elems.end()) continue;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                if (m.leqMat().get(cand, elems[i]) != static_cast<bool>((pLeq >> i) & 1u))
                    ok = false;
                else if (m.leqMat().get(elems[i], cand) !=
                         static_cast<bool>((pLeq >> (k + i)) & 1u))
                    ok = false;
                else if (m.llMat().get(cand, elems[i]) != static_cast<bool>((pLl >> i) & 1u))
                    ok = false;
                else if (m.llMat().get(elems[i], cand) !=
                         static_cast<bool>((pLl >> (k + i)) & 1u))
                    ok = false;
            }
            if (ok && m.leqMat().get(cand, cand) == static_cast<bool>((pLeq >> (2 * k)) & 1u) &&
                m.llMat().get(cand, cand) == static_cast<bool>((pLl >> (2 * k)) & 1u))
                return true;
        }
        return false;
    };

    auto describe = [](const Structure& sub, Row pLeq, Row pLl) {
        std::string d = "S={";
        for (int i = 0; i < sub.size(); ++i) {
            if (i) d += ",";
            d += sub.label(i);
        }
        d += "} leq:" + std::to_string(static_cast<unsigned long long>(pLeq)) +
             " ll:" + std::to_string(static_cast<unsigned long long>(pLl));
        return d;
    };

    struct Missing {
        std::vector<std::string> subLabels;
        Row pLeq, pLl;
    };
    auto scan = [&](const Structure& m) {
        std::vector<Missing> missing;
        for (int size = 0; size <= std::min(s, m.size()); ++size) {
            forEachCombination(m.size(), size, [&](const std::vector<int>& elems) {
                Row mask = 0;
                for (int e : elems) mask |= Row{1} << e;
                Structure sub = m.induced(mask);
                for (auto [pLeq, pLl] : typesFor(sub).patterns)
                    if (!realizes(m, elems, pLeq, pLl))
                        missing.push_back({sub.universe(), pLeq, pLl});
            });
        }
        return missing;
    };

    int freshCounter = 0;
    auto freshLabel = [&](const Structure& m) {
        for (;;) {
            std::string cand = "s" + std::to_string(++freshCounter);
            if (!m.hasElement(cand)) return cand;
        }
    };

    bool outOfBudget = false;
    while (!outOfBudget) {
        std::vector<Missing> missing = scan(out.m);
        if (missing.empty()) {
            out.fixpoint = true;
            break;
        }
        for (const auto& ms : missing) {
            std::vector<int> elems;
            for (const auto& l : ms.subLabels) elems.push_back(out.m.indexOf(l));
            if (realizes(out.m, elems, ms.pLeq, ms.pLl)) continue;  // satisfied this round
            if (out.m.size() + 1 > budget) {
                outOfBudget = true;
                break;
            }

            const int k = static_cast<int>(elems.size());
            Row mask = 0;
            for (int e : elems) mask |= Row{1} << e;
            Structure sub = out.m.induced(mask);
            std::string fresh = freshLabel(out.m);

            std::vector<LabelPair> leqPairs = sub.leq().pairs();
            std::vector<LabelPair> llPairs = sub.ll().pairs();
            auto addPoint = [&](std::vector<LabelPair>& pairs, Row p) {
                for (int i = 0; i < k; ++i) {
                    if ((p >> i) & 1u) pairs.emplace_back(fresh, sub.label(i));
                    if ((p >> (k + i)) & 1u) pairs.emplace_back(sub.label(i), fresh);
                }
                if ((p >> (2 * k)) & 1u) pairs.emplace_back(fresh, fresh);
            };
            addPoint(leqPairs, ms.pLeq);
            addPoint(llPairs, ms.pLl);
            std::vector<std::string> extLabels = sub.universe();
            extLabels.push_back(fresh);
            Structure b(extLabels, leqPairs, llPairs);

            VFormation v{out.m, b, sub};
            out.m = construct::amalgamate(v, t).D;
            ++out.realized;
        }
    }

    if (!out.fixpoint) {
        for (const auto& ms : scan(out.m)) {
            Row mask = 0;
            for (const auto& l : ms.subLabels) mask |= Row{1} << out.m.indexOf(l);
            out.unrealized.push_back(describe(out.m.induced(mask), ms.pLeq, ms.pLl));
        }
        out.report.add("BUDGET", {std::to_string(budget)});
        for (const auto& d : out.unrealized) out.report.add("UNREALIZED", {d});
    }
    if (Report r = validate(out.m, t); !r.ok())
        throw VerificationFailed("saturate: grown structure stopped validating", std::move(r));
    return out;
}

}  // namespace amalg::fraisse
