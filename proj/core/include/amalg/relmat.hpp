#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>

namespace amalg {

/// Dense n-by-n bit matrix over element indices. Row i holds the successor
/// set of i: bit j of row(i) is the pair (i, j). Everything the library does
/// with relations bottoms out here, so operations are branch-light bit
/// twiddling over the first n rows only.
class RelMat {
public:
    static constexpr int kMax = 64;
    using Row = std::uint64_t;

    RelMat() = default;
    explicit RelMat(int n) : n_(n) {}

    int size() const { return n_; }

    bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
    void set(int i, int j) { rows_[i] |= Row{1} << j; }
    void clear(int i, int j) { rows_[i] &= ~(Row{1} << j); }

    Row row(int i) const { return rows_[i]; }
    Row& rowRef(int i) { return rows_[i]; }

    Row universeMask() const { return n_ == 64 ? ~Row{0} : (Row{1} << n_) - 1; }

    bool empty() const {
        for (int i = 0; i < n_; ++i)
            if (rows_[i]) return false;
        return true;
    }

    int popcount() const {
        int c = 0;
        for (int i = 0; i < n_; ++i) c += std::popcount(rows_[i]);
        return c;
    }

    bool subsetOf(const RelMat& other) const {
        for (int i = 0; i < n_; ++i)
            if (rows_[i] & ~other.rows_[i]) return false;
        return true;
    }

    RelMat unionWith(const RelMat& other) const {
        RelMat r(n_);
        for (int i = 0; i < n_; ++i) r.rows_[i] = rows_[i] | other.rows_[i];
        return r;
    }

    /// Left-to-right composition: (i,k) present iff i R j and j S k for some j.
    RelMat composeWith(const RelMat& s) const {
        RelMat r(n_);
        for (int i = 0; i < n_; ++i) {
            Row mid = rows_[i];
            Row acc = 0;
            while (mid) {
                int j = std::countr_zero(mid);
                mid &= mid - 1;
                acc |= s.rows_[j];
            }
            r.rows_[i] = acc;
        }
        return r;
    }

    /// Smallest transitive superset (bitset Warshall).
    RelMat transitiveClosure() const {
        RelMat r = *this;
        for (int k = 0; k < n_; ++k) {
            const Row reach = r.rows_[k];
            const Row bit = Row{1} << k;
            for (int i = 0; i < n_; ++i)
                if (r.rows_[i] & bit) r.rows_[i] |= reach;
        }
        return r;
    }

    bool isTransitive() const {
        for (int i = 0; i < n_; ++i) {
            Row succ = rows_[i];
            while (succ) {
                int j = std::countr_zero(succ);
                succ &= succ - 1;
                if (rows_[j] & ~rows_[i]) return false;
            }
        }
        return true;
    }

    /// First (i,j,k) in index order with i R j, j R k but not i R k.
    bool transitivityWitness(int& wi, int& wj, int& wk) const {
        for (int i = 0; i < n_; ++i) {
            Row succ = rows_[i];
            while (succ) {
                int j = std::countr_zero(succ);
                succ &= succ - 1;
                Row missing = rows_[j] & ~rows_[i];
                if (missing) {
                    wi = i;
                    wj = j;
                    wk = std::countr_zero(missing);
                    return true;
                }
            }
        }
        return false;
    }

    bool reflexiveWitness(int& w) const {
        for (int i = 0; i < n_; ++i)
            if (!get(i, i)) {
                w = i;
                return true;
            }
        return false;
    }

    bool antireflexiveWitness(int& w) const {
        for (int i = 0; i < n_; ++i)
            if (get(i, i)) {
                w = i;
                return true;
            }
        return false;
    }

    bool antisymmetryWitness(int& wi, int& wj) const {
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (i != j && get(i, j) && get(j, i)) {
                    wi = i;
                    wj = j;
                    return true;
                }
            }
        }
        return false;
    }

    /// First pair present here but absent in `other`.
    bool differenceWitness(const RelMat& other, int& wi, int& wj) const {
        for (int i = 0; i < n_; ++i) {
            Row extra = rows_[i] & ~other.rows_[i];
            if (extra) {
                wi = i;
                wj = std::countr_zero(extra);
                return true;
            }
        }
        return false;
    }

    /// Restriction to the elements selected by `mask`, reindexed densely in
    /// increasing index order.
    RelMat restrict(Row mask) const {
        RelMat r(std::popcount(mask));
        int ri = 0;
        for (Row mi = mask; mi; mi &= mi - 1, ++ri) {
            int i = std::countr_zero(mi);
            Row out = rows_[i] & mask;
            Row packed = 0;
            int rj = 0;
            for (Row mj = mask; mj; mj &= mj - 1, ++rj) {
                int j = std::countr_zero(mj);
                if ((out >> j) & 1u) packed |= Row{1} << rj;
            }
            r.rows_[ri] = packed;
        }
        return r;
    }

    bool operator==(const RelMat& other) const {
        if (n_ != other.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (rows_[i] != other.rows_[i]) return false;
        return true;
    }

private:
    int n_ = 0;
    std::array<Row, kMax> rows_{};
};

}  // namespace amalg
