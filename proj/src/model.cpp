#include "trivote/model.hpp"

namespace trivote {

ElectionInstance validate_instance(std::vector<TrichotomousBallot> ballots, int m, int k,
                                   std::vector<std::string> candidate_names) {
    if (m < 1 || m > CandidateSet::max_candidates)
        throw RangeError("candidate count out of range: " + std::to_string(m));
    if (k < 1 || k > m)
        throw RangeError("committee size k=" + std::to_string(k) + " out of range [1, " +
                         std::to_string(m) + "]");
    if (ballots.empty()) throw RangeError("instance needs at least one ballot");

    const CandidateSet universe = CandidateSet::full(m);
    for (std::size_t i = 0; i < ballots.size(); ++i) {
        const auto& b = ballots[i];
        if (!b.approve.subset_of(universe) || !b.disapprove.subset_of(universe))
            throw RangeError("ballot " + std::to_string(i) + " references candidate index >= m");
        if (b.approve.intersects(b.disapprove))
            throw OverlapError("ballot " + std::to_string(i) +
                               " approves and disapproves the same candidate");
    }

    if (candidate_names.empty()) {
        candidate_names.reserve(m);
        for (int c = 0; c < m; ++c) candidate_names.push_back("c" + std::to_string(c));
    } else if (static_cast<int>(candidate_names.size()) != m) {
        throw RangeError("candidate name list does not match m");
    }

    return ElectionInstance{m, k, std::move(candidate_names), std::move(ballots)};
}

int position(const TrichotomousBallot& ballot, int c, int m) {
    if (c < 0 || c >= m) throw RangeError("candidate index out of range");
    if (ballot.approve.contains(c)) return 1;
    if (ballot.disapprove.contains(c)) return -1;
    return 0;
}

int positional_score(const ElectionInstance& inst, int c) {
    if (c < 0 || c >= inst.m) throw RangeError("candidate index out of range");
    int score = 0;
    for (const auto& b : inst.ballots) score += position(b, c, inst.m);
    return score;
}

DichotomousProfile project_approvals(const ElectionInstance& inst) {
    DichotomousProfile dic;
    dic.m = inst.m;
    dic.approval_sets.reserve(inst.ballots.size());
    for (const auto& b : inst.ballots) dic.approval_sets.push_back(b.approve);
    return dic;
}

bool is_decisive(const ElectionInstance& inst) {
    for (const auto& b : inst.ballots)
        if (!b.indifferent(inst.m).empty()) return false;
    return true;
}

bool meets_quota(int group_size, int l, int n, int k) {
    return static_cast<long long>(group_size) * k >= static_cast<long long>(l) * n;
}

}  // namespace trivote
