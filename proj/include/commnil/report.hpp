#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commnil/corpus.hpp"
#include "commnil/criterion.hpp"
#include "commnil/structure.hpp"
#include "commnil/verification.hpp"
#include "commnil/words.hpp"

namespace commnil {

inline constexpr const char *kToolName = "commnil";
inline constexpr const char *kToolVersion = "0.1.0";

// JSON views of the result types. Permutations are written in 1-based
// cycle notation. nlohmann::json keeps object keys sorted, which gives the
// stable key order reports rely on.

nlohmann::json to_json(const Permutation &p);
nlohmann::json to_json(const CriterionReport &r);
nlohmann::json to_json(const TheoremCheck &r);
nlohmann::json to_json(const ProbeReport &r);
nlohmann::json to_json(const SeriesReport &r);
nlohmann::json to_json(const XcloTrace &t);
/// Timing is left out unless requested, so reports stay byte-identical.
nlohmann::json to_json(const LemmaReport &r, bool with_timing = false);

/// FNV-1a over the canonical descriptor text of each group, as hex.
std::string corpus_hash(const std::vector<GroupDescriptor> &groups);

} // namespace commnil
