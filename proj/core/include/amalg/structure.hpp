#pragma once

#include <map>
#include <string>
#include <vector>

#include "amalg/relation.hpp"

namespace amalg {

using OpTable = std::map<std::string, std::string>;  // label -> label

/// A finite structure: universe, two binary relations leq and ll over it, and
/// named total unary operations. Immutable after construction.
class Structure {
public:
    Structure() = default;

    Structure(std::vector<std::string> universe,
              const std::vector<LabelPair>& leqPairs,
              const std::vector<LabelPair>& llPairs,
              const std::map<std::string, OpTable>& ops = {});

    static Structure fromParts(std::vector<std::string> sortedUniverse, RelMat leq, RelMat ll,
                               std::map<std::string, std::vector<int>> ops = {});

    int size() const { return static_cast<int>(universe_.size()); }
    const std::vector<std::string>& universe() const { return universe_; }
    int indexOf(const std::string& label) const;
    const std::string& label(int i) const { return universe_[i]; }
    bool hasElement(const std::string& label) const { return indexOf(label) >= 0; }

    const RelMat& leqMat() const { return leq_; }
    const RelMat& llMat() const { return ll_; }
    BinRel leq() const { return BinRel::fromMat(universe_, leq_); }
    BinRel ll() const { return BinRel::fromMat(universe_, ll_); }

    const std::map<std::string, std::vector<int>>& ops() const { return ops_; }
    std::vector<std::string> opNames() const;
    bool hasOp(const std::string& name) const { return ops_.count(name) > 0; }
    int applyOp(const std::string& name, int i) const { return ops_.at(name)[i]; }
    std::string applyOp(const std::string& name, const std::string& x) const;

    /// Induced substructure on the given subset of elements (relations and
    /// operations restricted). Operations must stay inside the subset.
    Structure induced(const std::vector<std::string>& subset) const;
    Structure induced(RelMat::Row mask) const;

    bool operator==(const Structure&) const = default;

private:
    std::vector<std::string> universe_;  // sorted
    RelMat leq_;
    RelMat ll_;
    std::map<std::string, std::vector<int>> ops_;  // name -> index table
};

}  // namespace amalg
