#include "amalg/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "amalg/errors.hpp"

namespace amalg {

namespace detail {

std::string canonical_key(int n, const RelMat& leq, const RelMat& ll,
                          const std::map<std::string, std::vector<int>>& ops) {
    // Encoding under a permutation p (position -> element): one byte per
    // matrix row (n <= 8), then each op table, in sorted name order. The key
    // is the least encoding over all permutations.
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    const size_t opCount = ops.size();
    std::string best;
    std::string cur;
    cur.resize(static_cast<size_t>(2 * n) + opCount * n + 1);
    cur[0] = static_cast<char>(n);

    std::vector<int> inv(n);
    do {
        for (int pos = 0; pos < n; ++pos) inv[perm[pos]] = pos;
        size_t at = 1;
        for (int i = 0; i < n; ++i) {
            unsigned byte = 0;
            for (int j = 0; j < n; ++j)
                if (leq.get(perm[i], perm[j])) byte |= 1u << j;
            cur[at++] = static_cast<char>(byte);
        }
        for (int i = 0; i < n; ++i) {
            unsigned byte = 0;
            for (int j = 0; j < n; ++j)
                if (ll.get(perm[i], perm[j])) byte |= 1u << j;
            cur[at++] = static_cast<char>(byte);
        }
        for (const auto& [_, table] : ops)
            for (int i = 0; i < n; ++i) cur[at++] = static_cast<char>(inv[table[perm[i]]]);
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Op names are part of the signature.
    for (const auto& [name, _] : ops) {
        best.push_back('|');
        best += name;
    }
    return best;
}

}  // namespace detail

std::string canonical_form(const Structure& s) {
    if (s.size() > kCanonicalFormMaxSize)
        throw SizeBoundExceeded("canonical_form supports universes up to 8 elements");
    return detail::canonical_key(s.size(), s.leqMat(), s.llMat(), s.ops());
}

}  // namespace amalg
