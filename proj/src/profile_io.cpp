#include "trivote/profile_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace trivote {

namespace {

using nlohmann::json;

CandidateSet names_to_set(const json& arr, const std::map<std::string, int>& index,
                          const std::string& field) {
    if (!arr.is_array()) throw ParseError("ballot field '" + field + "' must be an array");
    CandidateSet set;
    for (const auto& item : arr) {
        if (!item.is_string()) throw ParseError("candidate names must be strings");
        const auto it = index.find(item.get<std::string>());
        if (it == index.end())
            throw ParseError("unknown candidate name: " + item.get<std::string>());
        set.add(it->second);
    }
    return set;
}

json set_to_names(CandidateSet set, const std::vector<std::string>& names) {
    json arr = json::array();
    for (int c : set.indices()) arr.push_back(names[c]);
    return arr;
}

}  // namespace

ElectionInstance parse_profile(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed profile document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("candidates") || !doc.contains("k") ||
        !doc.contains("ballots"))
        throw ParseError("profile document needs candidates, k and ballots");

    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (const auto& item : doc["candidates"]) {
        if (!item.is_string()) throw ParseError("candidate names must be strings");
        const std::string name = item.get<std::string>();
        if (index.count(name)) throw ParseError("duplicate candidate name: " + name);
        index[name] = static_cast<int>(names.size());
        names.push_back(name);
    }
    const int m = static_cast<int>(names.size());
    if (!doc["k"].is_number_integer()) throw ParseError("k must be an integer");
    const int k = doc["k"].get<int>();

    std::vector<TrichotomousBallot> ballots;
    for (const auto& entry : doc["ballots"]) {
        TrichotomousBallot b;
        b.approve = names_to_set(entry.value("approve", json::array()), index, "approve");
        b.disapprove = names_to_set(entry.value("disapprove", json::array()), index, "disapprove");
        if (entry.contains("indifferent")) {
            const CandidateSet stated = names_to_set(entry["indifferent"], index, "indifferent");
            if (stated != (b.approve | b.disapprove).complement_within(m))
                throw ConsistencyError("explicit indifferent set is not the complement");
        }
        ballots.push_back(b);
    }
    return validate_instance(std::move(ballots), m, k, std::move(names));
}

std::string serialize_profile(const ElectionInstance& inst) {
    json doc;
    doc["version"] = "1";
    doc["candidates"] = inst.candidate_names;
    doc["k"] = inst.k;
    json ballots = json::array();
    for (const auto& b : inst.ballots) {
        json entry;
        entry["approve"] = set_to_names(b.approve, inst.candidate_names);
        entry["disapprove"] = set_to_names(b.disapprove, inst.candidate_names);
        ballots.push_back(entry);
    }
    doc["ballots"] = ballots;
    return doc.dump(2) + "\n";
}

ElectionInstance load_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open profile file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str());
}

namespace {

std::string probability_string(long long satisfied, long long total) {
    // satisfied/total rounded half-up to 4 places, formatted in fixed point.
    const long long scaled = (satisfied * 20000 + total) / (2 * total);
    char out[16];
    std::snprintf(out, sizeof out, "%lld.%04lld", scaled / 10000, scaled % 10000);
    return out;
}

}  // namespace

std::string table_to_csv(const SatisfactionTable& table) {
    std::ostringstream out;
    out << "rule,axiom,satisfied,total,probability\n";
    for (const auto& c : table.cells)
        out << rule_name(c.rule) << ',' << axiom_name(c.axiom) << ',' << c.satisfied << ','
            << c.total << ',' << probability_string(c.satisfied, c.total) << '\n';
    return out.str();
}

std::string table_to_json(const SatisfactionTable& table) {
    json doc;
    const auto& cfg = table.config;
    doc["config"] = {
        {"num_profiles", cfg.num_profiles},
        {"n_range", {cfg.n_lo, cfg.n_hi}},
        {"m_range", {cfg.m_lo, cfg.m_hi}},
        {"seed", cfg.seed},
        {"oracle_bound", cfg.oracle_bound},
        {"alpha", cfg.alpha},
        {"stv_mode", cfg.stv_mode == StvMode::Literal ? "literal" : "transfer"},
        {"sampler", cfg.variant == SamplerVariant::Independent ? "independent" : "nonempty-tiers"},
    };
    doc["resampled"] = table.resampled;
    json cells = json::array();
    for (const auto& c : table.cells)
        cells.push_back({{"rule", rule_name(c.rule)},
                         {"axiom", axiom_name(c.axiom)},
                         {"satisfied", c.satisfied},
                         {"total", c.total},
                         {"probability", probability_string(c.satisfied, c.total)}});
    doc["cells"] = cells;
    return doc.dump(2) + "\n";
}

std::string table_summary(const SatisfactionTable& table) {
    std::ostringstream out;
    out << "rule            ";
    for (AxiomId a : table.config.axioms) {
        std::string name = axiom_name(a);
        out << ' ' << name;
        for (std::size_t i = name.size(); i < 7; ++i) out << ' ';
    }
    out << '\n';
    for (RuleId r : table.config.rules) {
        std::string name = rule_name(r);
        out << name;
        for (std::size_t i = name.size(); i < 16; ++i) out << ' ';
        for (AxiomId a : table.config.axioms) {
            const auto& c = table.cell(r, a);
            out << ' ' << probability_string(c.satisfied, c.total) << "  ";
        }
        out << '\n';
    }
    return out.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write to " + tmp);
        out << content;
        if (!out.good()) throw ConfigError("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace trivote
