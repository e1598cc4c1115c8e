#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amalg/oracle.hpp"
#include "amalg/structure.hpp"
#include "amalg/theory.hpp"
#include "amalg/vformation.hpp"

namespace amalg::fraisse {

inline constexpr int kEnumerateMaxSize = 6;

/// All models of t with exactly n elements, one per isomorphism class, with
/// canonical labels "e1".."en", sorted by canonical form. Theories with a
/// nonempty operation signature are not enumerable here.
std::vector<Structure> enumerate_models(const Theory& t, int n);

struct ApFailure {
    VFormation v;
    oracle::SearchResult result;
};

struct ApCheckReport {
    bool ok = true;
    std::uint64_t instances = 0;
    std::vector<ApFailure> failures;
};

/// Exhaustively builds every normalized V-formation whose arms have at most n
/// elements from the enumerated models and all induced common parts, then
/// decides each by the constructor when the theory is admissible and by the
/// oracle otherwise. Failing instances are reported verbatim.
ApCheckReport check_ap_at_size(const Theory& t, int n, construct::AmalgamMode mode);

struct SaturateResult {
    Structure m;
    bool fixpoint = false;
    std::uint64_t realized = 0;
    /// Human-readable descriptors of extension types still unrealized when the
    /// budget ran out.
    std::vector<std::string> unrealized;
    Report report;
};

/// Finite approximation of the generic model by extension-property closure:
/// repeatedly find a substructure S of m with at most s elements and a
/// one-point extension of S that is a model of t but not yet realized over S
/// in m, then grow m by the verified constructor. Stops at fixpoint or when
/// the universe would exceed `budget` (partial result, reported).
SaturateResult saturate(const Structure& m, const Theory& t, int s, int budget);

}  // namespace amalg::fraisse
