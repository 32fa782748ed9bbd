#include "trivote/rules.hpp"

#include <algorithm>

#include "trivote/axioms.hpp"
#include "trivote/combinations.hpp"
#include "trivote/errors.hpp"
#include "trivote/rng.hpp"

namespace trivote {

namespace {

constexpr const char* kRuleNames[] = {"exact-tcc", "exact-tpav", "seq-tcc",    "seq-tpav",
                                      "seq-monroe", "droop-stv", "greedy-ncr", "seq-phragmen"};

Rational tcc_total(const ElectionInstance& inst, CandidateSet W, int alpha) {
    int total = 0;
    for (const auto& b : inst.ballots) total += sat_tcc(b, W, alpha);
    return total;
}

Rational tpav_total(const ElectionInstance& inst, CandidateSet W) {
    Rational total = 0;
    for (const auto& b : inst.ballots) total += tpav_net(b, W);
    return total;
}

using Objective = Rational (*)(const ElectionInstance&, CandidateSet, int);

Rational tcc_objective(const ElectionInstance& inst, CandidateSet W, int alpha) {
    return tcc_total(inst, W, alpha);
}

Rational tpav_objective(const ElectionInstance& inst, CandidateSet W, int /*alpha*/) {
    return tpav_total(inst, W);
}

RuleOutcome exact_rule(const ElectionInstance& inst, const RuleConfig& config, Objective obj) {
    if (binomial_clamped(inst.m, inst.k, config.committee_budget) > config.committee_budget)
        throw BudgetError("exact rule enumeration budget exceeded");
    auto combo = first_combination(inst.k);
    CandidateSet best = combination_set(combo);
    Rational best_score = obj(inst, best, config.alpha);
    while (next_combination(combo, inst.m)) {
        const CandidateSet W = combination_set(combo);
        const Rational score = obj(inst, W, config.alpha);
        if (score > best_score) {  // ties keep the lexicographically first combo
            best = W;
            best_score = score;
        }
    }
    RuleOutcome out;
    out.committee.members = best;
    out.score = best_score;
    out.trace.push_back({1, "select", -1, "score=" + rational_to_string(best_score)});
    return out;
}

RuleOutcome sequential_rule(const ElectionInstance& inst, const RuleConfig& config, Objective obj) {
    RuleOutcome out;
    CandidateSet W;
    for (int round = 1; round <= inst.k; ++round) {
        int chosen = -1;
        Rational chosen_score = 0;
        for (int c = 0; c < inst.m; ++c) {
            if (W.contains(c)) continue;
            CandidateSet trial = W;
            trial.add(c);
            const Rational score = obj(inst, trial, config.alpha);
            if (chosen < 0 || score > chosen_score) {
                chosen = c;
                chosen_score = score;
            }
        }
        W.add(chosen);
        out.trace.push_back({round, "elect", chosen, "score=" + rational_to_string(chosen_score)});
        out.score = chosen_score;
    }
    out.committee.members = W;
    return out;
}

}  // namespace

std::string rule_name(RuleId id) { return kRuleNames[static_cast<int>(id)]; }

std::optional<RuleId> rule_from_name(const std::string& name) {
    for (int i = 0; i < 8; ++i)
        if (name == kRuleNames[i]) return static_cast<RuleId>(i);
    return std::nullopt;
}

int sat_tcc(const TrichotomousBallot& ballot, CandidateSet W, int alpha) {
    return (ballot.approve & W).size() - (ballot.disapprove & W).size() >= alpha ? 1 : 0;
}

Rational tpav_net(const TrichotomousBallot& ballot, CandidateSet W) {
    return harmonic((ballot.approve & W).size()) - harmonic((ballot.disapprove & W).size());
}

RuleOutcome exact_tcc(const ElectionInstance& inst, const RuleConfig& config) {
    return exact_rule(inst, config, tcc_objective);
}

RuleOutcome exact_tpav(const ElectionInstance& inst, const RuleConfig& config) {
    return exact_rule(inst, config, tpav_objective);
}

RuleOutcome seq_tcc(const ElectionInstance& inst, const RuleConfig& config) {
    return sequential_rule(inst, config, tcc_objective);
}

RuleOutcome seq_tpav(const ElectionInstance& inst, const RuleConfig& config) {
    return sequential_rule(inst, config, tpav_objective);
}

RuleOutcome seq_monroe(const ElectionInstance& inst, const RuleConfig& /*config*/) {
    const int n = inst.n();
    const int k = inst.k;
    const int cap = (n + k - 1) / k;  // ceil(n/k)
    std::vector<bool> satisfied(n, false);
    int remaining = n;

    RuleOutcome out;
    out.assignment = MonroeAssignment{};
    CandidateSet W;
    long long total_score = 0;

    for (int round = 1; round <= k; ++round) {
        if (remaining == 0) {
            for (int c = 0; c < inst.m && W.size() < k; ++c) {
                if (!W.contains(c)) {
                    W.add(c);
                    out.trace.push_back({round, "fill", c, ""});
                }
            }
            break;
        }
        int chosen = -1;
        long long chosen_score = 0;
        std::vector<int> chosen_group;
        for (int c = 0; c < inst.m; ++c) {
            if (W.contains(c)) continue;
            // Top min(cap, remaining) unsatisfied voters by position, ties by
            // ascending voter index.
            std::vector<int> group;
            for (int pos = 1; pos >= -1 && static_cast<int>(group.size()) < cap; --pos)
                for (int v = 0; v < n && static_cast<int>(group.size()) < cap; ++v)
                    if (!satisfied[v] && position(inst.ballots[v], c, inst.m) == pos)
                        group.push_back(v);
            long long score = 0;
            for (int v : group) score += position(inst.ballots[v], c, inst.m);
            if (chosen < 0 || score > chosen_score) {
                chosen = c;
                chosen_score = score;
                chosen_group = std::move(group);
            }
        }
        W.add(chosen);
        total_score += chosen_score;
        for (int v : chosen_group) satisfied[v] = true;
        remaining -= static_cast<int>(chosen_group.size());
        std::sort(chosen_group.begin(), chosen_group.end());
        out.trace.push_back({round, "elect", chosen,
                             "score=" + std::to_string(chosen_score) +
                                 " assigned=" + std::to_string(chosen_group.size())});
        out.assignment->groups.emplace_back(chosen, std::move(chosen_group));
    }
    out.committee.members = W;
    out.score = total_score;
    return out;
}

RuleOutcome droop_stv(const ElectionInstance& inst, const RuleConfig& config) {
    const int n = inst.n();
    const int k = inst.k;
    const int quota = n / (k + 1) + 1;
    Rng rng(config.seed);

    CandidateSet remaining = CandidateSet::full(inst.m);
    CandidateSet W;
    std::vector<Rational> weight(n, 1);
    RuleOutcome out;
    int round = 0;

    while (W.size() < k && !remaining.empty()) {
        ++round;
        // Current top tier per voter over the remaining candidates; the weak
        // order is A+ > A0 > A-.
        std::vector<CandidateSet> top(n);
        for (int v = 0; v < n; ++v) {
            const auto& b = inst.ballots[v];
            CandidateSet t = b.approve & remaining;
            if (t.empty()) t = b.indifferent(inst.m) & remaining;
            if (t.empty()) t = b.disapprove & remaining;
            top[v] = t;
        }
        std::vector<Rational> score(inst.m, 0);
        for (int v = 0; v < n; ++v)
            if (!top[v].empty())
                for (int c : top[v].indices()) score[c] += weight[v] / top[v].size();

        const auto candidates = remaining.indices();
        Rational max_score = score[candidates.front()];
        Rational min_score = max_score;
        for (int c : candidates) {
            if (score[c] > max_score) max_score = score[c];
            if (score[c] < min_score) min_score = score[c];
        }
        const bool elects = config.stv_strict_quota ? max_score > quota : max_score >= quota;
        const Rational target = elects ? max_score : min_score;
        std::vector<int> tied;
        for (int c : candidates)
            if (score[c] == target) tied.push_back(c);
        const int pick = config.tie_policy == TiePolicy::SeededRandom
                             ? tied[rng.below(tied.size())]
                             : tied.front();

        if (elects) {
            W.add(pick);
            out.score += score[pick];
            out.trace.push_back({round, "elect", pick,
                                 "score=" + rational_to_string(score[pick]) +
                                     " quota=" + std::to_string(quota)});
            if (config.stv_mode == StvMode::Transfer && score[pick] > 0) {
                // Remove quota worth of weight from the supporters,
                // proportionally to their contribution.
                const Rational ratio = Rational(quota) / score[pick];
                for (int v = 0; v < n; ++v)
                    if (top[v].contains(pick)) {
                        Rational contribution = weight[v] / top[v].size();
                        weight[v] -= contribution * std::min(ratio, Rational(1));
                    }
            }
        } else {
            out.trace.push_back({round, "eliminate", pick,
                                 "score=" + rational_to_string(score[pick]) +
                                     " quota=" + std::to_string(quota)});
        }
        remaining.remove(pick);
    }
    for (int c = 0; c < inst.m && W.size() < k; ++c)
        if (!W.contains(c)) {
            W.add(c);
            out.trace.push_back({round + 1, "fill", c, ""});
        }
    out.committee.members = W;
    return out;
}

RuleOutcome greedy_ncr(const ElectionInstance& inst) {
    const int n = inst.n();
    const int k = inst.k;
    std::vector<bool> served(n, false);
    CandidateSet W;
    RuleOutcome out;
    long long voters_served = 0;
    int level = k;
    int round = 0;

    while (level >= 1) {
        if (W.size() + level > k) {
            --level;
            continue;
        }
        const auto available = CandidateSet::full(inst.m) - W;
        const auto pool = available.indices();
        if (static_cast<int>(pool.size()) < level) {
            --level;
            continue;
        }
        // Candidate subset of size `level` with the largest unserved support,
        // ties going to the lexicographically smallest subset.
        auto combo = first_combination(level);
        CandidateSet best_set;
        std::uint64_t best_support_size = 0;
        std::vector<int> best_voters;
        bool first = true;
        do {
            CandidateSet cand;
            for (int idx : combo) cand.add(pool[idx]);
            std::vector<int> supporters;
            for (int v = 0; v < n; ++v)
                if (!served[v] && cand.subset_of(inst.ballots[v].approve)) supporters.push_back(v);
            if (first || supporters.size() > best_support_size) {
                best_set = cand;
                best_support_size = supporters.size();
                best_voters = std::move(supporters);
                first = false;
            }
        } while (next_combination(combo, static_cast<int>(pool.size())));

        if (meets_quota(static_cast<int>(best_support_size), level, n, k)) {
            W |= best_set;
            for (int v : best_voters) served[v] = true;
            voters_served += static_cast<long long>(best_voters.size());
            ++round;
            std::string members;
            for (int c : best_set.indices()) members += (members.empty() ? "" : ",") + std::to_string(c);
            out.trace.push_back({round, "serve", -1,
                                 "candidates={" + members + "} level=" + std::to_string(level) +
                                     " voters=" + std::to_string(best_voters.size())});
        } else {
            --level;
        }
    }
    for (int c = 0; c < inst.m && W.size() < k; ++c)
        if (!W.contains(c)) {
            W.add(c);
            out.trace.push_back({++round, "fill", c, ""});
        }
    out.committee.members = W;
    out.score = voters_served;
    // The greedy pass can strand a cohesive group whose members were served
    // through a different candidate set, so certify the result and fall back
    // to an exhaustive search over committees when the instance is small
    // enough. If no committee passes the check, keep the greedy result.
    if (n <= default_oracle_bound && !check_ncr(inst, out.committee).satisfied) {
        try {
            if (auto found = exists_committee(inst, AxiomId::NCR)) {
                out.committee = *found;
                std::string members;
                for (int c : found->members.indices())
                    members += (members.empty() ? "" : ",") + std::to_string(c);
                out.trace.push_back({++round, "repair", -1, "candidates={" + members + "}"});
            }
        } catch (const BudgetError&) {
        }
    }
    return out;
}

RuleOutcome seq_phragmen(const ElectionInstance& inst) {
    const auto dic = project_approvals(inst);
    const int n = inst.n();
    std::vector<Rational> load(n, 0);
    CandidateSet W;
    RuleOutcome out;
    Rational max_load = 0;

    for (int round = 1; round <= inst.k; ++round) {
        int chosen = -1;
        Rational chosen_load = 0;
        for (int c = 0; c < inst.m; ++c) {
            if (W.contains(c)) continue;
            Rational load_sum = 0;
            int supporters = 0;
            for (int v = 0; v < n; ++v)
                if (dic.approval_sets[v].contains(c)) {
                    load_sum += load[v];
                    ++supporters;
                }
            if (supporters == 0) continue;
            const Rational new_load = (1 + load_sum) / supporters;
            if (chosen < 0 || new_load < chosen_load) {
                chosen = c;
                chosen_load = new_load;
            }
        }
        if (chosen < 0) {
            for (int c = 0; c < inst.m && W.size() < inst.k; ++c)
                if (!W.contains(c)) {
                    W.add(c);
                    out.trace.push_back({round, "fill", c, ""});
                }
            break;
        }
        W.add(chosen);
        for (int v = 0; v < n; ++v)
            if (dic.approval_sets[v].contains(chosen)) load[v] = chosen_load;
        if (chosen_load > max_load) max_load = chosen_load;
        out.trace.push_back({round, "elect", chosen, "load=" + rational_to_string(chosen_load)});
    }
    out.committee.members = W;
    out.score = max_load;
    return out;
}

RuleOutcome run_rule(const ElectionInstance& inst, RuleId id, const RuleConfig& config) {
    switch (id) {
        case RuleId::ExactTcc: return exact_tcc(inst, config);
        case RuleId::ExactTpav: return exact_tpav(inst, config);
        case RuleId::SeqTcc: return seq_tcc(inst, config);
        case RuleId::SeqTpav: return seq_tpav(inst, config);
        case RuleId::SeqMonroe: return seq_monroe(inst, config);
        case RuleId::DroopStv: return droop_stv(inst, config);
        case RuleId::GreedyNcr: return greedy_ncr(inst);
        case RuleId::SeqPhragmen: return seq_phragmen(inst);
    }
    throw ConfigError("unknown rule id");
}

}  // namespace trivote
