#include "trivote/axioms.hpp"

#include <algorithm>
#include <bit>

#include "trivote/combinations.hpp"

namespace trivote {

namespace {

constexpr const char* kAxiomNames[] = {"jr", "pjr", "spr", "wtjr", "wtpjr",
                                       "war", "wa", "ncr", "wncr"};

// Set accumulators for one voter group, recomputed literally.
struct GroupSets {
    CandidateSet u_plus, u_minus, u_zero;
    CandidateSet i_plus, i_zero, i_minus;
};

GroupSets literal_sets(const ElectionInstance& inst, std::uint64_t mask) {
    GroupSets g;
    g.i_plus = g.i_zero = g.i_minus = CandidateSet::full(inst.m);
    for (std::uint64_t b = mask; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        const auto& ballot = inst.ballots[v];
        const CandidateSet zero = ballot.indifferent(inst.m);
        g.u_plus |= ballot.approve;
        g.u_minus |= ballot.disapprove;
        g.u_zero |= zero;
        g.i_plus &= ballot.approve;
        g.i_zero &= zero;
        g.i_minus &= ballot.disapprove;
    }
    return g;
}

void require_committee_size(const ElectionInstance& inst, const Committee& W) {
    if (W.members.size() != inst.k)
        throw SizeError("committee has " + std::to_string(W.members.size()) +
                        " members, expected k=" + std::to_string(inst.k));
    if (!W.members.subset_of(CandidateSet::full(inst.m)))
        throw SizeError("committee references candidate index >= m");
}

AxiomReport satisfied_report(AxiomId id) { return AxiomReport{id, true, std::nullopt}; }

AxiomReport violation_report(AxiomId id, std::uint64_t voters, int level, CandidateSet cohesion,
                             int rep_found) {
    return AxiomReport{id, false, GroupWitness{voters, level, cohesion, rep_found}};
}

}  // namespace

std::string axiom_name(AxiomId id) { return kAxiomNames[static_cast<int>(id)]; }

std::optional<AxiomId> axiom_from_name(const std::string& name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (int i = 0; i < 9; ++i)
        if (lower == kAxiomNames[i]) return static_cast<AxiomId>(i);
    return std::nullopt;
}

std::vector<int> GroupWitness::voter_indices() const {
    std::vector<int> out;
    for (std::uint64_t b = voters; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

AxiomEvaluator::AxiomEvaluator(const ElectionInstance& inst, int bound) : inst_(inst) {
    const int n = inst.n();
    if (n > bound)
        throw BudgetError("exhaustive axiom check needs n <= " + std::to_string(bound) +
                          ", got n=" + std::to_string(n));
    const std::size_t total = std::size_t{1} << n;
    u_plus_.assign(total, 0);
    u_minus_.assign(total, 0);
    u_zero_.assign(total, 0);
    const std::uint64_t universe = CandidateSet::full(inst.m).bits();
    i_plus_.assign(total, universe);
    i_zero_.assign(total, universe);
    i_minus_.assign(total, universe);
    for (std::size_t mask = 1; mask < total; ++mask) {
        const std::size_t prev = mask & (mask - 1);
        const int v = std::countr_zero(mask);
        const auto& b = inst.ballots[v];
        const std::uint64_t ap = b.approve.bits();
        const std::uint64_t dp = b.disapprove.bits();
        const std::uint64_t zp = b.indifferent(inst.m).bits();
        u_plus_[mask] = u_plus_[prev] | ap;
        u_minus_[mask] = u_minus_[prev] | dp;
        u_zero_[mask] = u_zero_[prev] | zp;
        i_plus_[mask] = i_plus_[prev] & ap;
        i_zero_[mask] = i_zero_[prev] & zp;
        i_minus_[mask] = i_minus_[prev] & dp;
    }
}

AxiomReport AxiomEvaluator::check(AxiomId id, const Committee& W) const {
    require_committee_size(inst_, W);
    switch (id) {
        case AxiomId::JR:
            return check_jr(project_approvals(inst_), inst_.k, W);
        case AxiomId::PJR:
            return check_pjr(project_approvals(inst_), inst_.k, W);
        case AxiomId::SPR:
            return check_spr_impl(W);
        case AxiomId::WTJR:
        case AxiomId::WTPJR:
        case AxiomId::WAR:
        case AxiomId::WA:
            return check_class1(id, W);
        case AxiomId::NCR:
            return check_ncr_impl(W);
        case AxiomId::WNCR:
            return check_wncr_impl(W);
    }
    throw ConfigError("unknown axiom id");
}

// WTJR/WTPJR/WAR/WA share one scan shape: antecedent size |U+ \ U-|, a
// per-axiom representation set, and the level collapse r < min(lmax, s, lcap).
AxiomReport AxiomEvaluator::check_class1(AxiomId id, const Committee& W) const {
    const int n = inst_.n();
    const int k = inst_.k;
    const int max_l = (id == AxiomId::WTJR) ? 1 : k;
    const std::uint64_t w = W.members.bits();
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int g = std::popcount(mask);
        int lcap = static_cast<int>(static_cast<long long>(g) * k / n);
        lcap = std::min({lcap, k, max_l});
        if (lcap < 1) continue;
        const std::uint64_t cohesion = u_plus_[mask] & ~u_minus_[mask];
        const int s = std::popcount(cohesion);
        std::uint64_t rep = u_plus_[mask];
        if (id == AxiomId::WAR) rep |= i_zero_[mask];
        if (id == AxiomId::WA) rep |= u_zero_[mask];
        const int r = std::popcount(rep & w);
        const int bound = std::min(lcap, s);
        if (r < bound)
            return violation_report(id, mask, r + 1, CandidateSet(cohesion), r);
    }
    return satisfied_report(id);
}

AxiomReport AxiomEvaluator::check_spr_impl(const Committee& W) const {
    const int n = inst_.n();
    const int k = inst_.k;
    const std::uint64_t w = W.members.bits();
    // Voters with some approved candidate seated.
    std::uint64_t approvers_in_w = 0;
    for (int v = 0; v < n; ++v)
        if (inst_.ballots[v].approve.bits() & w) approvers_in_w |= std::uint64_t{1} << v;
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = 1; mask < total; ++mask) {
        if (!meets_quota(std::popcount(mask), 1, n, k)) continue;
        const std::uint64_t cohesion = u_plus_[mask] & ~u_minus_[mask];
        if (!cohesion) continue;
        const bool has_approver = (mask & approvers_in_w) != 0;
        const bool seats_despised = (i_minus_[mask] & w) != 0;
        if (!has_approver || seats_despised)
            return violation_report(AxiomId::SPR, mask, 1, CandidateSet(cohesion), 0);
    }
    return satisfied_report(AxiomId::SPR);
}

AxiomReport AxiomEvaluator::check_wncr_impl(const Committee& W) const {
    const int n = inst_.n();
    const int k = inst_.k;
    const std::uint64_t w = W.members.bits();
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int g = std::popcount(mask);
        int lcap = std::min(static_cast<int>(static_cast<long long>(g) * k / n), k);
        if (lcap < 1) continue;
        const std::uint64_t cohesion = i_plus_[mask];
        const int bound = std::min(lcap, std::popcount(cohesion));
        const int r = std::popcount(u_plus_[mask] & w);
        if (r < bound)
            return violation_report(AxiomId::WNCR, mask, r + 1, CandidateSet(cohesion), r);
    }
    return satisfied_report(AxiomId::WNCR);
}

// Candidate-side route: a violating group V' at level l yields a size-l
// C' in its A+ intersection whose full supporter set S is also violating,
// so enumerating candidate subsets finds a violation iff one exists.
AxiomReport AxiomEvaluator::check_ncr_impl(const Committee& W) const {
    const int n = inst_.n();
    const int k = inst_.k;
    const std::uint64_t w = W.members.bits();
    for (int l = 1; l <= k && l <= inst_.m; ++l) {
        auto combo = first_combination(l);
        do {
            const CandidateSet cprime = combination_set(combo);
            std::uint64_t supporters = 0;
            for (int v = 0; v < n; ++v)
                if (cprime.subset_of(inst_.ballots[v].approve))
                    supporters |= std::uint64_t{1} << v;
            if (!meets_quota(std::popcount(supporters), l, n, k)) continue;
            const std::uint64_t cohesion = i_plus_[supporters];
            const int r = std::popcount(cohesion & w);
            if (r < l)
                return violation_report(AxiomId::NCR, supporters, l, CandidateSet(cohesion), r);
        } while (next_combination(combo, inst_.m));
    }
    return satisfied_report(AxiomId::NCR);
}

AxiomReport check_spr(const ElectionInstance& inst, const Committee& W) {
    return AxiomEvaluator(inst).check(AxiomId::SPR, W);
}
AxiomReport check_wtjr(const ElectionInstance& inst, const Committee& W) {
    return AxiomEvaluator(inst).check(AxiomId::WTJR, W);
}
AxiomReport check_wtpjr(const ElectionInstance& inst, const Committee& W) {
    return AxiomEvaluator(inst).check(AxiomId::WTPJR, W);
}
AxiomReport check_war(const ElectionInstance& inst, const Committee& W) {
    return AxiomEvaluator(inst).check(AxiomId::WAR, W);
}
AxiomReport check_wa(const ElectionInstance& inst, const Committee& W) {
    return AxiomEvaluator(inst).check(AxiomId::WA, W);
}
AxiomReport check_ncr(const ElectionInstance& inst, const Committee& W) {
    return AxiomEvaluator(inst).check(AxiomId::NCR, W);
}
AxiomReport check_wncr(const ElectionInstance& inst, const Committee& W) {
    return AxiomEvaluator(inst).check(AxiomId::WNCR, W);
}

AxiomReport check_jr(const DichotomousProfile& dic, int k, const Committee& W) {
    const int n = dic.n();
    if (W.members.size() != k) throw SizeError("committee size does not match k");
    // A group whose approval union is empty imposes no constraint; the
    // violating group, when one exists, is all unrepresented voters at once.
    std::uint64_t unrepresented = 0;
    CandidateSet unions;
    for (int v = 0; v < n; ++v) {
        if (!dic.approval_sets[v].intersects(W.members)) {
            unrepresented |= std::uint64_t{1} << v;
            unions |= dic.approval_sets[v];
        }
    }
    if (!unions.empty() && meets_quota(std::popcount(unrepresented), 1, n, k))
        return violation_report(AxiomId::JR, unrepresented, 1, unions, 0);
    return satisfied_report(AxiomId::JR);
}

AxiomReport check_pjr(const DichotomousProfile& dic, int k, const Committee& W) {
    const int n = dic.n();
    if (W.members.size() != k) throw SizeError("committee size does not match k");
    if (n > default_oracle_bound)
        throw BudgetError("pjr check needs n <= " + std::to_string(default_oracle_bound));
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint64_t> u(total, 0), in(total, CandidateSet::full(dic.m).bits());
    for (std::size_t mask = 1; mask < total; ++mask) {
        const std::size_t prev = mask & (mask - 1);
        const std::uint64_t a = dic.approval_sets[std::countr_zero(mask)].bits();
        u[mask] = u[prev] | a;
        in[mask] = in[prev] & a;
    }
    const std::uint64_t w = W.members.bits();
    for (std::size_t mask = 1; mask < total; ++mask) {
        const int g = std::popcount(mask);
        int lcap = std::min(static_cast<int>(static_cast<long long>(g) * k / n), k);
        if (lcap < 1) continue;
        const int bound = std::min(lcap, std::popcount(in[mask]));
        const int r = std::popcount(u[mask] & w);
        if (r < bound)
            return violation_report(AxiomId::PJR, mask, r + 1, CandidateSet(in[mask]), r);
    }
    return satisfied_report(AxiomId::PJR);
}

AxiomReport check_axiom(const ElectionInstance& inst, const Committee& W, AxiomId id) {
    return AxiomEvaluator(inst).check(id, W);
}

namespace {

// Literal antecedent/consequent evaluation for one (group, level); the oracle
// and witness verification share it so a reported witness always re-verifies.
struct LiteralVerdict {
    bool antecedent = false;
    bool consequent = false;
    CandidateSet cohesion;
    int rep_found = 0;
};

LiteralVerdict literal_evaluate(const ElectionInstance& inst, const Committee& W, AxiomId id,
                                const GroupSets& g, int l) {
    const CandidateSet w = W.members;
    LiteralVerdict v;
    switch (id) {
        case AxiomId::JR: {
            v.cohesion = g.u_plus;  // projection: A_i = A+_i
            v.antecedent = l == 1 && !g.u_plus.empty();
            v.rep_found = (g.u_plus & w).size();
            v.consequent = v.rep_found >= 1;
            break;
        }
        case AxiomId::PJR: {
            v.cohesion = g.i_plus;
            v.antecedent = g.i_plus.size() >= l;
            v.rep_found = (g.u_plus & w).size();
            v.consequent = v.rep_found >= l;
            break;
        }
        case AxiomId::SPR: {
            v.cohesion = g.u_plus - g.u_minus;
            v.antecedent = l == 1 && v.cohesion.size() >= 1;
            v.consequent = (g.u_plus & w).size() >= 1 && (g.i_minus & w).size() == 0;
            v.rep_found = 0;
            break;
        }
        case AxiomId::WTJR:
        case AxiomId::WTPJR: {
            v.cohesion = g.u_plus - g.u_minus;
            v.antecedent = v.cohesion.size() >= l && (id == AxiomId::WTPJR || l == 1);
            v.rep_found = (g.u_plus & w).size();
            v.consequent = v.rep_found >= l;
            break;
        }
        case AxiomId::WAR: {
            v.cohesion = g.u_plus - g.u_minus;
            v.antecedent = v.cohesion.size() >= l;
            v.rep_found = ((g.u_plus | g.i_zero) & w).size();
            v.consequent = v.rep_found >= l;
            break;
        }
        case AxiomId::WA: {
            v.cohesion = g.u_plus - g.u_minus;
            v.antecedent = v.cohesion.size() >= l;
            v.rep_found = ((g.u_plus | g.u_zero) & w).size();
            v.consequent = v.rep_found >= l;
            break;
        }
        case AxiomId::NCR: {
            v.cohesion = g.i_plus;
            v.antecedent = g.i_plus.size() >= l;
            v.rep_found = (g.i_plus & w).size();
            v.consequent = v.rep_found >= l;
            break;
        }
        case AxiomId::WNCR: {
            v.cohesion = g.i_plus;
            v.antecedent = g.i_plus.size() >= l;
            v.rep_found = (g.u_plus & w).size();
            v.consequent = v.rep_found >= l;
            break;
        }
    }
    // SPR, WTJR and JR only bind at level 1.
    if ((id == AxiomId::SPR || id == AxiomId::JR) && l != 1) v.antecedent = false;
    return v;
}

}  // namespace

AxiomReport brute_force_check(const ElectionInstance& inst, const Committee& W, AxiomId id,
                              int oracle_bound) {
    require_committee_size(inst, W);
    const int n = inst.n();
    if (n > oracle_bound)
        throw BudgetError("oracle bound exceeded: n=" + std::to_string(n));
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = 1; mask < total; ++mask) {
        const GroupSets g = literal_sets(inst, mask);
        const int gsize = std::popcount(mask);
        for (int l = 1; l <= inst.k; ++l) {
            if (!meets_quota(gsize, l, n, inst.k)) break;
            const LiteralVerdict v = literal_evaluate(inst, W, id, g, l);
            if (v.antecedent && !v.consequent)
                return violation_report(id, mask, l, v.cohesion, v.rep_found);
        }
    }
    return satisfied_report(id);
}

std::optional<Committee> exists_committee(const ElectionInstance& inst, AxiomId id,
                                          long long committee_budget) {
    if (binomial_clamped(inst.m, inst.k, committee_budget) > committee_budget)
        throw BudgetError("committee enumeration budget exceeded");
    AxiomEvaluator eval(inst);
    auto combo = first_combination(inst.k);
    do {
        Committee W{combination_set(combo)};
        if (eval.check(id, W).satisfied) return W;
    } while (next_combination(combo, inst.m));
    return std::nullopt;
}

bool witness_certifies(const ElectionInstance& inst, const Committee& W, AxiomId id,
                       const GroupWitness& w) {
    if (w.voters == 0) return false;
    const int gsize = std::popcount(w.voters);
    if (!meets_quota(gsize, w.level, inst.n(), inst.k)) return false;
    const GroupSets g = literal_sets(inst, w.voters);
    const LiteralVerdict v = literal_evaluate(inst, W, id, g, w.level);
    return v.antecedent && !v.consequent;
}

}  // namespace trivote
