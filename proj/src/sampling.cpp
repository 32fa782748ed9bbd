#include "trivote/sampling.hpp"

#include <bit>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "trivote/errors.hpp"

namespace trivote {

namespace {

TrichotomousBallot sample_independent(int m, Rng& rng) {
    TrichotomousBallot b;
    for (int c = 0; c < m; ++c) {
        switch (rng.below(3)) {
            case 0: b.approve.add(c); break;
            case 1: break;  // indifferent
            case 2: b.disapprove.add(c); break;
        }
    }
    return b;
}

// Ordered set partition of the candidates into exactly t nonempty blocks,
// sampled by rejection.
std::vector<int> sample_partition(int m, int t, Rng& rng) {
    std::vector<int> block(m);
    while (true) {
        unsigned hit = 0;
        for (int c = 0; c < m; ++c) {
            block[c] = static_cast<int>(rng.below(t));
            hit |= 1u << block[c];
        }
        if (std::popcount(hit) == t) return block;
    }
}

TrichotomousBallot sample_nonempty_tiers(int m, Rng& rng) {
    // Number of ordered partitions into exactly t nonempty blocks is t!*S(m,t).
    const long double w1 = 1.0L;
    const long double w2 = m >= 2 ? std::pow(2.0L, m) - 2.0L : 0.0L;
    const long double w3 = m >= 3 ? std::pow(3.0L, m) - 3.0L * std::pow(2.0L, m) + 3.0L : 0.0L;
    const long double total = w1 + w2 + w3;
    const long double draw =
        static_cast<long double>(rng.next()) / static_cast<long double>(UINT64_MAX) * total;
    int t = draw < w1 ? 1 : (draw < w1 + w2 ? 2 : 3);

    TrichotomousBallot b;
    if (t == 1) return b;  // single tier: full indifference
    const auto block = sample_partition(m, t, rng);
    for (int c = 0; c < m; ++c) {
        if (block[c] == 0) b.approve.add(c);
        // t == 2 maps the second block to disapproval; t == 3 keeps the
        // middle block indifferent.
        if (block[c] == t - 1) b.disapprove.add(c);
    }
    return b;
}

}  // namespace

ExperimentConfig ExperimentConfig::full_scale() {
    ExperimentConfig c;
    c.num_profiles = 10'000;
    c.n_lo = 4;
    c.n_hi = 20;
    c.m_lo = 2;
    c.m_hi = 15;
    c.oracle_bound = 20;
    return c;
}

const SatisfactionCell& SatisfactionTable::cell(RuleId rule, AxiomId axiom) const {
    for (const auto& c : cells)
        if (c.rule == rule && c.axiom == axiom) return c;
    throw ConfigError("no cell for rule/axiom pair");
}

TrichotomousBallot sample_ballot(int m, Rng& rng, SamplerVariant variant) {
    if (m < 1) throw RangeError("sample_ballot needs m >= 1");
    return variant == SamplerVariant::Independent ? sample_independent(m, rng)
                                                  : sample_nonempty_tiers(m, rng);
}

ElectionInstance sample_instance(const ExperimentConfig& config, Rng& rng) {
    const int n = rng.uniform_int(config.n_lo, config.n_hi);
    const int m = rng.uniform_int(config.m_lo, config.m_hi);
    const int k = rng.uniform_int(1, m - 1);
    std::vector<TrichotomousBallot> ballots;
    ballots.reserve(n);
    for (int i = 0; i < n; ++i) ballots.push_back(sample_ballot(m, rng, config.variant));
    return validate_instance(std::move(ballots), m, k);
}

void validate_config(const ExperimentConfig& config) {
    if (config.num_profiles < 1) throw ConfigError("num_profiles must be >= 1");
    if (config.n_lo < 1 || config.n_lo > config.n_hi) throw ConfigError("bad n range");
    if (config.m_lo < 2 || config.m_lo > config.m_hi)
        throw ConfigError("bad m range (m >= 2 so that k in [1, m-1] is nonempty)");
    if (config.rules.empty() || config.axioms.empty())
        throw ConfigError("rules and axioms must be nonempty");
    if (config.n_lo > config.oracle_bound)
        throw ConfigError("n range lies entirely above the oracle bound");
    if (config.m_hi > CandidateSet::max_candidates) throw ConfigError("m range too large");
}

namespace {

struct Tally {
    std::vector<long long> satisfied;  // rules x axioms
    long long resampled = 0;

    explicit Tally(std::size_t cells) : satisfied(cells, 0) {}

    void merge(const Tally& o) {
        for (std::size_t i = 0; i < satisfied.size(); ++i) satisfied[i] += o.satisfied[i];
        resampled += o.resampled;
    }
};

// One profile: sample, compute each rule's committee, check each axiom.
// Everything is derived from the profile index so execution order never
// matters.
void evaluate_profile(const ExperimentConfig& config, long long index, Tally& tally) {
    Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(index)));
    ElectionInstance inst = sample_instance(config, rng);
    while (inst.n() > config.oracle_bound) {
        ++tally.resampled;
        inst = sample_instance(config, rng);
    }
    AxiomEvaluator eval(inst, config.oracle_bound);
    const std::size_t num_axioms = config.axioms.size();
    for (std::size_t r = 0; r < config.rules.size(); ++r) {
        RuleConfig rule_config;
        rule_config.alpha = config.alpha;
        rule_config.stv_mode = config.stv_mode;
        rule_config.stv_strict_quota = config.stv_strict_quota;
        rule_config.seed = Rng::derive(config.seed, (static_cast<std::uint64_t>(index) << 8) | r);
        const RuleOutcome outcome = run_rule(inst, config.rules[r], rule_config);
        for (std::size_t a = 0; a < num_axioms; ++a)
            if (eval.check(config.axioms[a], outcome.committee).satisfied)
                ++tally.satisfied[r * num_axioms + a];
    }
}

SatisfactionTable assemble(const ExperimentConfig& config, const Tally& tally) {
    SatisfactionTable table;
    table.config = config;
    table.resampled = tally.resampled;
    const std::size_t num_axioms = config.axioms.size();
    for (std::size_t r = 0; r < config.rules.size(); ++r)
        for (std::size_t a = 0; a < num_axioms; ++a)
            table.cells.push_back({config.rules[r], config.axioms[a],
                                   tally.satisfied[r * num_axioms + a], config.num_profiles});
    return table;
}

}  // namespace

SatisfactionTable run_experiment_serial(const ExperimentConfig& config) {
    validate_config(config);
    Tally tally(config.rules.size() * config.axioms.size());
    for (long long i = 0; i < config.num_profiles; ++i) evaluate_profile(config, i, tally);
    return assemble(config, tally);
}

SatisfactionTable run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    const std::size_t cells = config.rules.size() * config.axioms.size();
    Tally tally(cells);
#ifdef _OPENMP
    const int requested = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel num_threads(requested)
    {
        Tally local(cells);
#pragma omp for schedule(dynamic, 16) nowait
        for (long long i = 0; i < config.num_profiles; ++i) evaluate_profile(config, i, local);
#pragma omp critical
        tally.merge(local);
    }
#else
    for (long long i = 0; i < config.num_profiles; ++i) evaluate_profile(config, i, tally);
#endif
    return assemble(config, tally);
}

}  // namespace trivote
