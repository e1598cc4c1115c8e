#pragma once

#include <string>

#include "amalg/structure.hpp"

namespace amalg {

/// Isomorphism-invariant encoding: canonical_form(S1) == canonical_form(S2)
/// iff S1 and S2 are isomorphic. Computed as the lexicographically least
/// relabeling over all universe permutations. Universes up to 8 elements.
std::string canonical_form(const Structure& s);

inline constexpr int kCanonicalFormMaxSize = 8;

namespace detail {

/// Label-free canonical bytes for an index-level structure; the hot path for
/// model enumeration.
std::string canonical_key(int n, const RelMat& leq, const RelMat& ll,
                          const std::map<std::string, std::vector<int>>& ops);

}  // namespace detail

}  // namespace amalg
