#pragma once

#include <map>
#include <string>
#include <vector>

namespace amalg {

/// Property set for one relation. Transitivity is not a member: it is
/// demanded by the theory-wide `transitive` flag, which is on by default.
struct RelProps {
    bool reflexive = false;      // 2
    bool antireflexive = false;  // 4
    bool antisymmetric = false;  // 5

    bool operator==(const RelProps&) const = default;
};

struct OpSig {
    bool leq = false;
    bool ll = false;

    bool operator==(const OpSig&) const = default;
};

/// A theory of two binary relations leq and ll: per-relation properties P and
/// Q, interaction conditions N (finer/coarser/A1/A2), optional extra axioms,
/// and a preservation signature for named unary operations.
struct Theory {
    RelProps P;  // constraints on leq
    RelProps Q;  // constraints on ll

    // N
    bool finer = false;    // F: ll is a subset of leq
    bool coarser = false;  // C: leq is a subset of ll
    bool a1 = false;       // w leq x, x ll y  =>  w ll y
    bool a2 = false;       // x ll y, y leq z  =>  x ll z

    // extras
    bool urquhart = false;       // U: x leq y and x ll y imply x = y
    bool unionOfChains = false;  // common lower (and dually upper) bound forces comparability
    int maxAntichain = 0;        // 0 = unbounded; k > 0 forbids leq-antichains of size k+1

    // Both relations are transitive unless explicitly switched off.
    bool transitive = true;

    std::map<std::string, OpSig> opSig;

    bool hasExtras() const { return urquhart || unionOfChains || maxAntichain > 0; }

    /// Degenerate flag per the conventions: combinations that force equality
    /// of the relations or admit only the empty structure. Informational.
    std::vector<std::string> notes() const;

    bool operator==(const Theory&) const = default;
};

/// Convenience builders for the recurring theories.
Theory posetTheory();                   // single partial order, ll forced equal to leq
Theory posetWithCoarserOrderTheory();   // leq poset, ll a reflexive coarser order
Theory auxiliaryRelationTheory();       // leq poset, ll auxiliary (finer + A1 + A2)
Theory causalSpaceTheory();             // auxiliary and antireflexive
Theory urquhartTheory(bool transitive = true);  // two preorders with (U)

}  // namespace amalg
