#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trivote/axioms.hpp"
#include "trivote/profile_io.hpp"
#include "trivote/rules.hpp"
#include "trivote/sampling.hpp"

namespace {

using namespace trivote;

constexpr int kExitViolatedOrNone = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetError = 3;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string committee_names(const Committee& W, const ElectionInstance& inst) {
    std::vector<std::string> names;
    for (int c : W.members.indices()) names.push_back(inst.candidate_names[c]);
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& name : names) {
        if (!out.empty()) out += ' ';
        out += name;
    }
    return out;
}

Committee parse_committee(const std::string& csv, const ElectionInstance& inst) {
    Committee W;
    for (const auto& name : split_csv(csv)) {
        const auto it =
            std::find(inst.candidate_names.begin(), inst.candidate_names.end(), name);
        if (it == inst.candidate_names.end()) throw ParseError("unknown candidate name: " + name);
        W.members.add(static_cast<int>(it - inst.candidate_names.begin()));
    }
    return W;
}

void print_witness(const GroupWitness& w, const ElectionInstance& inst) {
    std::string voters;
    for (int v : w.voter_indices()) voters += (voters.empty() ? "" : ",") + std::to_string(v);
    std::string cohesion;
    for (int c : w.cohesion_set.indices())
        cohesion += (cohesion.empty() ? "" : ",") + inst.candidate_names[c];
    std::cout << "VIOLATED voters=" << voters << " level=" << w.level << " cohesion={" << cohesion
              << "} representation=" << w.representation_found << "\n";
}

void print_trace(const RuleOutcome& outcome) {
    for (const auto& ev : outcome.trace) {
        std::cout << "round " << ev.round << ": " << ev.action;
        if (ev.candidate >= 0) std::cout << " c" << ev.candidate;
        if (!ev.detail.empty()) std::cout << ' ' << ev.detail;
        std::cout << "\n";
    }
}

int cmd_compute(const std::string& path, const std::string& rule, const RuleConfig& config,
                bool trace) {
    const auto id = rule_from_name(rule);
    if (!id) {
        std::cerr << "unknown rule: " << rule << "\n";
        return kExitInputError;
    }
    const ElectionInstance inst = load_profile(path);
    const RuleOutcome outcome = run_rule(inst, *id, config);
    std::cout << committee_names(outcome.committee, inst) << "\n";
    if (trace) print_trace(outcome);
    return 0;
}

int cmd_check(const std::string& path, const std::string& axiom, const std::string& committee) {
    const auto id = axiom_from_name(axiom);
    if (!id) {
        std::cerr << "unknown axiom: " << axiom << "\n";
        return kExitInputError;
    }
    const ElectionInstance inst = load_profile(path);
    const Committee W = parse_committee(committee, inst);
    const AxiomReport report = check_axiom(inst, W, *id);
    if (report.satisfied) {
        std::cout << "SATISFIED\n";
        return 0;
    }
    print_witness(*report.witness, inst);
    return kExitViolatedOrNone;
}

int cmd_exists(const std::string& path, const std::string& axiom) {
    const auto id = axiom_from_name(axiom);
    if (!id) {
        std::cerr << "unknown axiom: " << axiom << "\n";
        return kExitInputError;
    }
    const ElectionInstance inst = load_profile(path);
    const auto W = exists_committee(inst, *id);
    if (!W) {
        std::cout << "NONE\n";
        return kExitViolatedOrNone;
    }
    std::cout << committee_names(*W, inst) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiwinner committee elections with trichotomous ballots"};
    app.require_subcommand(1);

    std::string profile_path, rule, axiom, committee, out_path, format = "csv";
    std::string stv_mode = "literal", sampler = "independent", rules_csv, axioms_csv;
    bool trace = false, full_scale = false, serial = false, strict_quota = false;
    RuleConfig rule_config;
    ExperimentConfig exp;
    int gen_n = 5, gen_m = 4, gen_k = 2;
    std::uint64_t seed = 0;

    auto* compute = app.add_subcommand("compute", "Compute a committee under a voting rule");
    compute->add_option("profile", profile_path, "Profile document")->required();
    compute->add_option("--rule", rule, "Voting rule")->required();
    compute->add_option("--alpha", rule_config.alpha, "Alpha for TCC");
    compute->add_option("--seed", seed, "Tie-break seed");
    compute->add_option("--stv-mode", stv_mode, "literal|transfer");
    compute->add_flag("--stv-strict-quota", strict_quota, "Eliminate on score == quota");
    compute->add_flag("--trace", trace, "Print round-by-round trace");

    auto* check = app.add_subcommand("check", "Check an axiom against a committee");
    check->add_option("profile", profile_path, "Profile document")->required();
    check->add_option("--axiom", axiom, "Axiom name")->required();
    check->add_option("--committee", committee, "Comma-separated candidate names")->required();

    auto* exists = app.add_subcommand("exists", "Search for a committee satisfying an axiom");
    exists->add_option("profile", profile_path, "Profile document")->required();
    exists->add_option("--axiom", axiom, "Axiom name")->required();

    auto* experiment = app.add_subcommand("experiment", "Monte Carlo satisfaction experiment");
    experiment->add_option("--profiles", exp.num_profiles, "Number of sampled profiles");
    experiment->add_option("--n", [&exp](const std::vector<std::string>& v) {
        exp.n_lo = std::stoi(v.at(0));
        exp.n_hi = std::stoi(v.at(1));
        return true;
    }, "Voter count range (lo hi)")->expected(2);
    experiment->add_option("--m", [&exp](const std::vector<std::string>& v) {
        exp.m_lo = std::stoi(v.at(0));
        exp.m_hi = std::stoi(v.at(1));
        return true;
    }, "Candidate count range (lo hi)")->expected(2);
    experiment->add_option("--seed", exp.seed, "Master seed");
    experiment->add_option("--rules", rules_csv, "Comma-separated rule names");
    experiment->add_option("--axioms", axioms_csv, "Comma-separated axiom names");
    experiment->add_option("--oracle-bound", exp.oracle_bound, "Max n for exhaustive checking");
    experiment->add_option("--alpha", exp.alpha, "Alpha for TCC");
    experiment->add_option("--stv-mode", stv_mode, "literal|transfer");
    experiment->add_option("--sampler", sampler, "independent|nonempty-tiers");
    experiment->add_option("--threads", exp.threads, "Worker threads (0 = default)");
    experiment->add_option("--out", out_path, "Output file");
    experiment->add_option("--format", format, "csv|json");
    experiment->add_flag("--full-scale", full_scale, "10,000 profiles, n in [4,20], m in [2,15]");
    experiment->add_flag("--serial", serial, "Use the serial reference runner");

    auto* gen = app.add_subcommand("gen", "Generate a random profile document");
    gen->add_option("--n", gen_n, "Voters");
    gen->add_option("--m", gen_m, "Candidates");
    gen->add_option("--k", gen_k, "Committee size");
    gen->add_option("--seed", seed, "Seed");
    gen->add_option("--sampler", sampler, "independent|nonempty-tiers");
    gen->add_option("--out", out_path, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        rule_config.seed = seed;
        if (stv_mode == "transfer")
            rule_config.stv_mode = StvMode::Transfer;
        else if (stv_mode != "literal")
            throw ConfigError("unknown stv mode: " + stv_mode);
        rule_config.stv_strict_quota = strict_quota;

        if (compute->parsed()) return cmd_compute(profile_path, rule, rule_config, trace);
        if (check->parsed()) return cmd_check(profile_path, axiom, committee);
        if (exists->parsed()) return cmd_exists(profile_path, axiom);

        if (experiment->parsed()) {
            if (full_scale) {
                const auto base = exp;
                exp = ExperimentConfig::full_scale();
                exp.seed = base.seed;
                exp.threads = base.threads;
            }
            exp.stv_mode = rule_config.stv_mode;
            if (sampler == "nonempty-tiers")
                exp.variant = SamplerVariant::NonemptyTiers;
            else if (sampler != "independent")
                throw ConfigError("unknown sampler: " + sampler);
            if (!rules_csv.empty()) {
                exp.rules.clear();
                for (const auto& name : split_csv(rules_csv)) {
                    const auto id = rule_from_name(name);
                    if (!id) throw ConfigError("unknown rule: " + name);
                    exp.rules.push_back(*id);
                }
            }
            if (!axioms_csv.empty()) {
                exp.axioms.clear();
                for (const auto& name : split_csv(axioms_csv)) {
                    const auto id = axiom_from_name(name);
                    if (!id) throw ConfigError("unknown axiom: " + name);
                    exp.axioms.push_back(*id);
                }
            }
            const SatisfactionTable table =
                serial ? run_experiment_serial(exp) : run_experiment(exp);
            if (!out_path.empty()) {
                if (format == "csv")
                    atomic_write(out_path, table_to_csv(table));
                else if (format == "json")
                    atomic_write(out_path, table_to_json(table));
                else
                    throw ConfigError("unknown format: " + format);
            }
            std::cout << table_summary(table);
            if (table.resampled > 0)
                std::cout << "(" << table.resampled << " oversized profiles re-sampled)\n";
            return 0;
        }

        if (gen->parsed()) {
            const SamplerVariant variant = sampler == "nonempty-tiers"
                                               ? SamplerVariant::NonemptyTiers
                                               : SamplerVariant::Independent;
            Rng rng(seed);
            std::vector<TrichotomousBallot> ballots;
            for (int i = 0; i < gen_n; ++i) ballots.push_back(sample_ballot(gen_m, rng, variant));
            std::vector<std::string> names;
            for (int c = 0; c < gen_m; ++c) names.push_back("c" + std::to_string(c));
            const auto inst = validate_instance(std::move(ballots), gen_m, gen_k, names);
            const std::string doc = serialize_profile(inst);
            if (out_path.empty())
                std::cout << doc;
            else
                atomic_write(out_path, doc);
            return 0;
        }
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return 0;
}
