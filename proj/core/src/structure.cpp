#include "amalg/structure.hpp"

#include <algorithm>

#include "amalg/errors.hpp"

namespace amalg {

Structure::Structure(std::vector<std::string> universe, const std::vector<LabelPair>& leqPairs,
                     const std::vector<LabelPair>& llPairs,
                     const std::map<std::string, OpTable>& ops) {
    universe_ = sortedUniqueLabels(std::move(universe));
    const int n = static_cast<int>(universe_.size());
    leq_ = RelMat(n);
    ll_ = RelMat(n);

    auto fill = [&](RelMat& m, const std::vector<LabelPair>& pairs, const char* which) {
        for (const auto& [x, y] : pairs) {
            int i = indexOf(x);
            int j = indexOf(y);
            if (i < 0 || j < 0)
                throw InvalidInput(std::string(which) + " pair (" + x + "," + y +
                                   ") outside the universe");
            if (m.get(i, j))
                throw InvalidInput(std::string(which) + " has duplicate pair (" + x + "," + y + ")");
            m.set(i, j);
        }
    };
    fill(leq_, leqPairs, "leq");
    fill(ll_, llPairs, "ll");

    for (const auto& [name, table] : ops) {
        if (name.empty()) throw InvalidInput("empty operation name");
        std::vector<int> t(n, -1);
        for (const auto& [x, y] : table) {
            int i = indexOf(x);
            int j = indexOf(y);
            if (i < 0 || j < 0)
                throw InvalidInput("op " + name + " maps (" + x + " -> " + y +
                                   ") outside the universe");
            t[i] = j;
        }
        for (int i = 0; i < n; ++i)
            if (t[i] < 0)
                throw InvalidInput("op " + name + " is not total: missing value at " +
                                   universe_[i]);
        ops_.emplace(name, std::move(t));
    }
}

Structure Structure::fromParts(std::vector<std::string> sortedUniverse, RelMat leq, RelMat ll,
                               std::map<std::string, std::vector<int>> ops) {
    Structure s;
    s.universe_ = std::move(sortedUniverse);
    s.leq_ = leq;
    s.ll_ = ll;
    s.ops_ = std::move(ops);
    return s;
}

int Structure::indexOf(const std::string& label) const {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), label);
    if (it == universe_.end() || *it != label) return -1;
    return static_cast<int>(it - universe_.begin());
}

std::vector<std::string> Structure::opNames() const {
    std::vector<std::string> names;
    names.reserve(ops_.size());
    for (const auto& [name, _] : ops_) names.push_back(name);
    return names;
}

std::string Structure::applyOp(const std::string& name, const std::string& x) const {
    int i = indexOf(x);
    if (i < 0) throw InvalidInput("op argument " + x + " outside the universe");
    return universe_[ops_.at(name)[i]];
}

Structure Structure::induced(const std::vector<std::string>& subset) const {
    RelMat::Row mask = 0;
    for (const auto& l : subset) {
        int i = indexOf(l);
        if (i < 0) throw InvalidInput("induced: element " + l + " outside the universe");
        mask |= RelMat::Row{1} << i;
    }
    return induced(mask);
}

Structure Structure::induced(RelMat::Row mask) const {
    std::vector<std::string> labels;
    std::vector<int> newIndex(universe_.size(), -1);
    for (int i = 0; i < size(); ++i) {
        if ((mask >> i) & 1u) {
            newIndex[i] = static_cast<int>(labels.size());
            labels.push_back(universe_[i]);
        }
    }
    std::map<std::string, std::vector<int>> ops;
    for (const auto& [name, table] : ops_) {
        std::vector<int> t;
        t.reserve(labels.size());
        for (int i = 0; i < size(); ++i) {
            if (newIndex[i] < 0) continue;
            int img = table[i];
            if (newIndex[img] < 0)
                throw InvalidInput("induced: op " + name + " leaves the subset at " +
                                   universe_[i]);
            t.push_back(newIndex[img]);
        }
        ops.emplace(name, std::move(t));
    }
    return fromParts(std::move(labels), leq_.restrict(mask), ll_.restrict(mask), std::move(ops));
}

}  // namespace amalg
