#pragma once

#include <cstdint>
#include <optional>

#include "amalg/construct.hpp"
#include "amalg/theory.hpp"
#include "amalg/vformation.hpp"

namespace amalg::oracle {

/// Bounds of a search. Over-union mode is exactly allowIdentification=false
/// with extraElements=0: the amalgam universe is forced to be A ∪ B and the
/// embeddings are inclusions.
struct SearchConfig {
    bool allowIdentification = false;
    int extraElements = 0;
    double timeBudgetSeconds = 0.0;  // 0 = unlimited

    bool overUnion() const { return !allowIdentification && extraElements == 0; }

    bool operator==(const SearchConfig&) const = default;
};

struct SearchStats {
    std::uint64_t nodesVisited = 0;
    SearchConfig bound;
};

/// Either a witness amalgam (always re-verified at the requested mode before
/// being returned) or a certificate that the bounded space is exhausted.
struct SearchResult {
    bool isWitness() const { return amalgam.has_value(); }
    std::optional<construct::Amalgam> amalgam;
    SearchStats stats;
};

/// Exhaustive backtracking search with constraint propagation. Branches are
/// explored in a fixed lexicographic order (identifications by size then
/// label, fresh-element counts ascending, operation completions ascending,
/// relation cells leq-before-ll row-major with false before true), so the
/// first witness found is the lexicographically least and repeated runs are
/// bit-identical. Throws TimeBudgetExceeded when the wall-clock budget runs
/// out; that is distinct from Exhausted.
SearchResult search(const VFormation& v, const Theory& t, construct::AmalgamMode mode,
                    const SearchConfig& cfg);

/// Over-union search at SUPER. For the universal theories handled here an
/// Exhausted outcome is a genuine refutation of superamalgamation over the
/// union: the candidate space is finite and fully enumerated.
SearchResult decide_superamalgamation_over_union(const VFormation& v, const Theory& t);

}  // namespace amalg::oracle
