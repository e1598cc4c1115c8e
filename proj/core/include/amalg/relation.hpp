#pragma once

#include <string>
#include <utility>
#include <vector>

#include "amalg/relmat.hpp"
#include "amalg/report.hpp"
#include "amalg/theory.hpp"

namespace amalg {

using LabelPair = std::pair<std::string, std::string>;

/// A finite binary relation over a labeled universe. The universe is kept
/// sorted; label order is the tie-break order everywhere determinism matters.
/// Reflexivity is never implicit — a reflexive relation stores its diagonal.
class BinRel {
public:
    BinRel() = default;

    /// Universe may arrive in any order; duplicates are rejected, as are
    /// pairs with coordinates outside the universe.
    BinRel(std::vector<std::string> universe, const std::vector<LabelPair>& pairs);

    static BinRel fromMat(std::vector<std::string> sortedUniverse, RelMat mat);

    const std::vector<std::string>& universe() const { return universe_; }
    const RelMat& mat() const { return mat_; }
    int size() const { return static_cast<int>(universe_.size()); }

    int indexOf(const std::string& label) const;  // -1 when absent
    const std::string& label(int i) const { return universe_[i]; }

    bool contains(const std::string& x, const std::string& y) const;

    /// All pairs in label order.
    std::vector<LabelPair> pairs() const;

    bool operator==(const BinRel&) const = default;

private:
    std::vector<std::string> universe_;
    RelMat mat_;
};

/// Left-to-right composition: (x,z) in compose(R,S) iff x R y and y S z for
/// some y. Throws UniverseMismatch unless the universes agree.
BinRel compose(const BinRel& r, const BinRel& s);

/// Smallest transitive superset; idempotent.
BinRel transitive_closure(const BinRel& r);

/// Transitivity plus the requested properties, each failure with its
/// lexicographically least witness.
Report check_rel_props(const BinRel& r, const RelProps& props);

/// Helpers shared with the validators.
std::vector<std::string> sortedUniqueLabels(std::vector<std::string> labels);

}  // namespace amalg
