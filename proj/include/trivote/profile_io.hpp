#pragma once

#include <string>

#include "trivote/model.hpp"
#include "trivote/sampling.hpp"

namespace trivote {

/// Parses a profile document: JSON object with `version`, `candidates`, `k`
/// and `ballots` (each with `approve`/`disapprove` name lists and an optional
/// `indifferent` list that must equal the complement). Throws ParseError,
/// ConsistencyError, or the validation errors.
ElectionInstance parse_profile(const std::string& text);

std::string serialize_profile(const ElectionInstance& inst);

ElectionInstance load_profile(const std::string& path);

std::string table_to_csv(const SatisfactionTable& table);
std::string table_to_json(const SatisfactionTable& table);

/// Human-readable rule x axiom matrix for the terminal.
std::string table_summary(const SatisfactionTable& table);

/// Writes via a temporary file and rename, so a failed run never leaves a
/// partial output behind.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace trivote
