#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trivote/model.hpp"
#include "trivote/rational.hpp"

namespace trivote {

enum class RuleId {
    ExactTcc,
    ExactTpav,
    SeqTcc,
    SeqTpav,
    SeqMonroe,
    DroopStv,
    GreedyNcr,
    SeqPhragmen,
};

inline constexpr RuleId all_rules[] = {RuleId::ExactTcc,  RuleId::ExactTpav, RuleId::SeqTcc,
                                       RuleId::SeqTpav,   RuleId::SeqMonroe, RuleId::DroopStv,
                                       RuleId::GreedyNcr, RuleId::SeqPhragmen};

std::string rule_name(RuleId id);
std::optional<RuleId> rule_from_name(const std::string& name);

enum class StvMode { Literal, Transfer };
enum class TiePolicy { LowestIndex, SeededRandom };

struct RuleConfig {
    int alpha = 1;                 // alpha for the TCC satisfaction threshold
    std::uint64_t seed = 0;        // drives every randomized tie-break
    StvMode stv_mode = StvMode::Literal;
    TiePolicy tie_policy = TiePolicy::SeededRandom;  // STV only; other rules use lowest index
    bool stv_strict_quota = false;  // literal reading: eliminate on score == quota
    long long committee_budget = 2'000'000;  // exact rules enumerate C(m, k)
};

struct TraceEvent {
    int round = 0;
    std::string action;  // elect / eliminate / fill / serve ...
    int candidate = -1;  // -1 when the event concerns a candidate set
    std::string detail;
};

struct MonroeAssignment {
    // Elected candidate with the voters assigned to it; sets are pairwise
    // disjoint and of size ceil(n/k) except possibly the last.
    std::vector<std::pair<int, std::vector<int>>> groups;
};

struct RuleOutcome {
    Committee committee;
    Rational score = 0;
    std::vector<TraceEvent> trace;
    std::optional<MonroeAssignment> assignment;  // seq_monroe only
};

/// 1 iff |A+ ∩ W| - |A- ∩ W| >= alpha.
int sat_tcc(const TrichotomousBallot& ballot, CandidateSet W, int alpha);

/// H(|A+ ∩ W|) - H(|A- ∩ W|), exact.
Rational tpav_net(const TrichotomousBallot& ballot, CandidateSet W);

RuleOutcome exact_tcc(const ElectionInstance& inst, const RuleConfig& config);
RuleOutcome exact_tpav(const ElectionInstance& inst, const RuleConfig& config);
RuleOutcome seq_tcc(const ElectionInstance& inst, const RuleConfig& config);
RuleOutcome seq_tpav(const ElectionInstance& inst, const RuleConfig& config);
RuleOutcome seq_monroe(const ElectionInstance& inst, const RuleConfig& config);
RuleOutcome droop_stv(const ElectionInstance& inst, const RuleConfig& config);
RuleOutcome greedy_ncr(const ElectionInstance& inst);
RuleOutcome seq_phragmen(const ElectionInstance& inst);

RuleOutcome run_rule(const ElectionInstance& inst, RuleId id, const RuleConfig& config);

}  // namespace trivote
