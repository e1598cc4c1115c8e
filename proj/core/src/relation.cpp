#include "amalg/relation.hpp"

#include <algorithm>

#include "amalg/errors.hpp"

namespace amalg {

std::vector<std::string> sortedUniqueLabels(std::vector<std::string> labels) {
    for (const auto& l : labels)
        if (l.empty()) throw InvalidInput("empty label in universe");
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw InvalidInput("duplicate label in universe");
    if (labels.size() > RelMat::kMax)
        throw SizeBoundExceeded("universe exceeds the dense-kernel bound of 64 elements");
    return labels;
}

BinRel::BinRel(std::vector<std::string> universe, const std::vector<LabelPair>& pairs) {
    universe_ = sortedUniqueLabels(std::move(universe));
    mat_ = RelMat(static_cast<int>(universe_.size()));
    for (const auto& [x, y] : pairs) {
        int i = indexOf(x);
        int j = indexOf(y);
        if (i < 0 || j < 0)
            throw InvalidInput("relation pair (" + x + "," + y + ") outside the universe");
        if (mat_.get(i, j)) throw InvalidInput("duplicate pair (" + x + "," + y + ")");
        mat_.set(i, j);
    }
}

BinRel BinRel::fromMat(std::vector<std::string> sortedUniverse, RelMat mat) {
    BinRel r;
    r.universe_ = std::move(sortedUniverse);
    r.mat_ = mat;
    return r;
}

int BinRel::indexOf(const std::string& label) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), label);
    if (it == universe_.end() || *it != label) return -1;
    return static_cast<int>(it - universe_.begin());
}

bool BinRel::contains(const std::string& x, const std::string& y) const {
    int i = indexOf(x);
    int j = indexOf(y);
    return i >= 0 && j >= 0 && mat_.get(i, j);
}

std::vector<LabelPair> BinRel::pairs() const {
    std::vector<LabelPair> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (mat_.get(i, j)) out.emplace_back(universe_[i], universe_[j]);
    return out;
}

BinRel compose(const BinRel& r, const BinRel& s) {
    if (r.universe() != s.universe())
        throw UniverseMismatch("compose: relations live on different universes");
    return BinRel::fromMat(r.universe(), r.mat().composeWith(s.mat()));
}

BinRel transitive_closure(const BinRel& r) {
    return BinRel::fromMat(r.universe(), r.mat().transitiveClosure());
}

Report check_rel_props(const BinRel& r, const RelProps& props) {
    Report rep;
    const RelMat& m = r.mat();
    int i, j, k;
    if (m.transitivityWitness(i, j, k))
        rep.add("TRANSITIVE", {r.label(i), r.label(j), r.label(k)});
    if (props.reflexive && m.reflexiveWitness(i)) rep.add("REFLEXIVE", {r.label(i)});
    if (props.antireflexive && m.antireflexiveWitness(i)) rep.add("ANTIREFLEXIVE", {r.label(i)});
    if (props.antisymmetric && m.antisymmetryWitness(i, j))
        rep.add("ANTISYMMETRIC", {r.label(i), r.label(j)});
    return rep;
}

}  // namespace amalg
