#pragma once

#include <cstdint>
#include <vector>

#include "trivote/axioms.hpp"
#include "trivote/model.hpp"
#include "trivote/rng.hpp"
#include "trivote/rules.hpp"

namespace trivote {

enum class SamplerVariant {
    Independent,    // each candidate lands in {+, 0, -} with probability 1/3
    NonemptyTiers,  // uniform over ordered set partitions into <= 3 nonempty tiers
};

struct ExperimentConfig {
    int num_profiles = 2000;
    int n_lo = 4, n_hi = 14;
    int m_lo = 2, m_hi = 12;
    std::uint64_t seed = 1;
    std::vector<RuleId> rules = {RuleId::SeqMonroe, RuleId::SeqTcc, RuleId::DroopStv,
                                 RuleId::SeqTpav};
    std::vector<AxiomId> axioms = {AxiomId::WA, AxiomId::WAR, AxiomId::WTPJR, AxiomId::WNCR,
                                   AxiomId::NCR};
    int oracle_bound = 14;  // instances with n above this are re-sampled
    SamplerVariant variant = SamplerVariant::Independent;
    int alpha = 1;
    StvMode stv_mode = StvMode::Literal;
    bool stv_strict_quota = false;
    int threads = 0;  // 0 = runtime default

    /// Full-scale parameters: 10,000 profiles, n in [4,20], m in [2,15].
    static ExperimentConfig full_scale();
};

struct SatisfactionCell {
    RuleId rule;
    AxiomId axiom;
    long long satisfied = 0;
    long long total = 0;

    double probability() const {
        return total ? static_cast<double>(satisfied) / static_cast<double>(total) : 0.0;
    }
};

struct SatisfactionTable {
    ExperimentConfig config;
    long long resampled = 0;
    std::vector<SatisfactionCell> cells;  // row-major: rules x axioms

    const SatisfactionCell& cell(RuleId rule, AxiomId axiom) const;
};

TrichotomousBallot sample_ballot(int m, Rng& rng,
                                 SamplerVariant variant = SamplerVariant::Independent);

ElectionInstance sample_instance(const ExperimentConfig& config, Rng& rng);

/// Serial reference runner.
SatisfactionTable run_experiment_serial(const ExperimentConfig& config);

/// OpenMP runner; per-profile seed derivation makes the table identical to the
/// serial one for any thread count.
SatisfactionTable run_experiment(const ExperimentConfig& config);

void validate_config(const ExperimentConfig& config);

}  // namespace trivote
