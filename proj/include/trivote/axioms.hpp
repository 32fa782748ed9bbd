#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trivote/model.hpp"

namespace trivote {

enum class AxiomId { JR, PJR, SPR, WTJR, WTPJR, WAR, WA, NCR, WNCR };

inline constexpr AxiomId all_axioms[] = {AxiomId::JR,  AxiomId::PJR,  AxiomId::SPR,
                                         AxiomId::WTJR, AxiomId::WTPJR, AxiomId::WAR,
                                         AxiomId::WA,  AxiomId::NCR,  AxiomId::WNCR};

std::string axiom_name(AxiomId id);
std::optional<AxiomId> axiom_from_name(const std::string& name);

/// A violating voter group: the quota level l it binds at, the set whose size
/// certified the antecedent, and how much representation it actually got.
struct GroupWitness {
    std::uint64_t voters = 0;  // bitmask over voter indices
    int level = 0;
    CandidateSet cohesion_set;
    int representation_found = 0;

    std::vector<int> voter_indices() const;
};

struct AxiomReport {
    AxiomId axiom;
    bool satisfied = false;
    std::optional<GroupWitness> witness;
};

/// Largest n for which exhaustive voter-subset enumeration is attempted.
inline constexpr int default_oracle_bound = 20;

/// Exhaustive checker over voter subsets, with per-subset set accumulators
/// built once per instance so several (axiom, committee) queries stay cheap.
class AxiomEvaluator {
public:
    explicit AxiomEvaluator(const ElectionInstance& inst, int bound = default_oracle_bound);

    AxiomReport check(AxiomId id, const Committee& W) const;

private:
    const ElectionInstance& inst_;
    std::vector<std::uint64_t> u_plus_, u_minus_, u_zero_;
    std::vector<std::uint64_t> i_plus_, i_zero_, i_minus_;

    AxiomReport check_class1(AxiomId id, const Committee& W) const;
    AxiomReport check_spr_impl(const Committee& W) const;
    AxiomReport check_wncr_impl(const Committee& W) const;
    AxiomReport check_ncr_impl(const Committee& W) const;
};

// Specialized entry points; each builds an evaluator internally. Callers
// checking many axioms against one instance should hold an AxiomEvaluator.
AxiomReport check_spr(const ElectionInstance& inst, const Committee& W);
AxiomReport check_wtjr(const ElectionInstance& inst, const Committee& W);
AxiomReport check_wtpjr(const ElectionInstance& inst, const Committee& W);
AxiomReport check_war(const ElectionInstance& inst, const Committee& W);
AxiomReport check_wa(const ElectionInstance& inst, const Committee& W);
AxiomReport check_ncr(const ElectionInstance& inst, const Committee& W);
AxiomReport check_wncr(const ElectionInstance& inst, const Committee& W);

AxiomReport check_jr(const DichotomousProfile& dic, int k, const Committee& W);
AxiomReport check_pjr(const DichotomousProfile& dic, int k, const Committee& W);

/// Dispatch over all nine axioms; JR and PJR are checked on the approval
/// projection of the instance.
AxiomReport check_axiom(const ElectionInstance& inst, const Committee& W, AxiomId id);

/// Reference oracle: enumerates every nonempty voter subset in ascending
/// binary encoding and evaluates the axiom's antecedent and consequent
/// literally, recomputing all unions/intersections per subset. Returns the
/// first violation found (subsets ascending, levels ascending).
AxiomReport brute_force_check(const ElectionInstance& inst, const Committee& W, AxiomId id,
                              int oracle_bound = default_oracle_bound);

/// Enumerates all size-k committees in lexicographic member order; returns
/// the first one satisfying the axiom, or nullopt.
std::optional<Committee> exists_committee(const ElectionInstance& inst, AxiomId id,
                                          long long committee_budget = 2'000'000);

/// Re-evaluates a witness against the instance: quota met, antecedent true,
/// consequent false. Used to validate reports independently of the checkers.
bool witness_certifies(const ElectionInstance& inst, const Committee& W, AxiomId id,
                       const GroupWitness& w);

}  // namespace trivote
