#pragma once

#include <vector>

#include "trivote/candidate_set.hpp"

namespace trivote {

/// Advances a sorted index tuple to the next l-combination of 0..m-1 in
/// lexicographic order. Returns false when exhausted.
inline bool next_combination(std::vector<int>& c, int m) {
    const int l = static_cast<int>(c.size());
    for (int i = l - 1; i >= 0; --i) {
        if (c[i] < m - l + i) {
            ++c[i];
            for (int j = i + 1; j < l; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_combination(int l) {
    std::vector<int> c(l);
    for (int i = 0; i < l; ++i) c[i] = i;
    return c;
}

inline CandidateSet combination_set(const std::vector<int>& c) {
    CandidateSet s;
    for (int i : c) s.add(i);
    return s;
}

/// C(m, l) clamped at `cap` to avoid overflow in budget checks.
inline long long binomial_clamped(int m, int l, long long cap) {
    long long r = 1;
    for (int i = 1; i <= l; ++i) {
        r = r * (m - l + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace trivote
