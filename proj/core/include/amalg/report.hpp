#pragma once

#include <string>
#include <vector>

namespace amalg {

struct Violation {
    std::string axiom;
    std::vector<std::string> witness;

    bool operator==(const Violation&) const = default;
};

/// Outcome of a check. `ok()` holds exactly when no violation was recorded;
/// witnesses are lexicographically minimal for their axiom.
struct Report {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string axiom, std::vector<std::string> witness) {
        violations.push_back({std::move(axiom), std::move(witness)});
    }

    void absorb(const Report& other, const std::string& prefix = "") {
        for (const auto& v : other.violations)
            violations.push_back({prefix + v.axiom, v.witness});
    }

    bool operator==(const Report&) const = default;
};

}  // namespace amalg
