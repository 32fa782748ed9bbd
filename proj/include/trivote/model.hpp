#pragma once

#include <string>
#include <vector>

#include "trivote/candidate_set.hpp"
#include "trivote/errors.hpp"

namespace trivote {

/// One voter's partition of the candidate set: approved, indifferent,
/// disapproved. The indifference set is always derived as the complement of
/// approve | disapprove; it is never stored independently.
struct TrichotomousBallot {
    CandidateSet approve;
    CandidateSet disapprove;

    CandidateSet indifferent(int m) const {
        return (approve | disapprove).complement_within(m);
    }
};

struct ElectionInstance {
    int m = 0;
    int k = 0;
    std::vector<std::string> candidate_names;  // display only
    std::vector<TrichotomousBallot> ballots;

    int n() const { return static_cast<int>(ballots.size()); }
};

struct Committee {
    CandidateSet members;
};

struct DichotomousProfile {
    int m = 0;
    std::vector<CandidateSet> approval_sets;

    int n() const { return static_cast<int>(approval_sets.size()); }
};

/// Normalizes and validates raw ballots. Throws OverlapError when a ballot
/// approves and disapproves the same candidate, RangeError when n, m or k is
/// out of range or a ballot references an index >= m.
ElectionInstance validate_instance(std::vector<TrichotomousBallot> ballots, int m, int k,
                                   std::vector<std::string> candidate_names = {});

/// pos_c(i): 1 approved, 0 indifferent, -1 disapproved.
int position(const TrichotomousBallot& ballot, int c, int m);

/// Sum of pos_c(i) over all voters; bounded in [-n, n].
int positional_score(const ElectionInstance& inst, int c);

/// Keeps each A+ set, merging indifference and disapproval away.
DichotomousProfile project_approvals(const ElectionInstance& inst);

/// True iff every voter's indifference set is empty.
bool is_decisive(const ElectionInstance& inst);

/// group_size >= l*n/k, evaluated as group_size*k >= l*n in integers.
bool meets_quota(int group_size, int l, int n, int k);

}  // namespace trivote
