#pragma once

#include <map>
#include <string>

#include "amalg/report.hpp"
#include "amalg/structure.hpp"
#include "amalg/theory.hpp"

namespace amalg {

/// Checks, in order: transitivity of both relations (unless the theory drops
/// it), P on leq, Q on ll, finer/coarser, A1, A2, each extra axiom, and the
/// preservation signature of every operation. Every failure carries its
/// lexicographically least witness.
Report validate(const Structure& s, const Theory& t);

/// Classical embedding check: f injective and, for both relations and every
/// operation, x R y in s iff f(x) R f(y) in tgt, and f(op(x)) = op(f(x)).
Report is_embedding(const std::map<std::string, std::string>& f, const Structure& s,
                    const Structure& tgt, const Theory& t);

namespace detail {

/// Index-level validator used by the search hot paths; witnesses are reported
/// through the labeled wrapper above.
bool validate_kernel(const RelMat& leq, const RelMat& ll,
                     const std::map<std::string, std::vector<int>>& ops, const Theory& t);

}  // namespace detail

}  // namespace amalg
