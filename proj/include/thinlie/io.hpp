#pragma once

// JSON interchange: structure constants, patterns, family specs, centralizer
// sequences and reports. Every document carries "schema_version".

#include <string>

#include <json.hpp>

#include "thinlie/derivations.hpp"
#include "thinlie/engine.hpp"
#include "thinlie/maxclass.hpp"
#include "thinlie/patterns.hpp"

namespace thinlie::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {p, q, N, top, components, ad_x, ad_y, brackets}; brackets lists the
/// nonzero [b_i, b_j] with i < j and total degree <= N.
json structure_to_json(const GradedAlgebra& L, bool brackets = true);
/// Rebuilds an algebra from structure_to_json output.
GradedAlgebra structure_from_json(const json& j);

json pattern_to_json(const DiamondPattern& P);
/// Accepts {p, q, entries[, horizon]}; entries are normalized. Without a
/// horizon the pattern is read up to last entry + q - 2. Throws PatternError.
DiamondPattern pattern_from_json(const json& j);

json detection_to_json(const DetectionReport& r);

/// {family, params: {p, q, s, mu, sequence}}
json family_to_json(const FamilySpec& s);
FamilySpec family_from_json(const json& j);

/// {p, entries: "YYX..."}, character i encoding c_{i+2}.
json sequence_to_json(std::uint32_t p, const CentralizerSequence& s);
std::pair<std::uint32_t, CentralizerSequence> sequence_from_json(const json& j);

json report_to_json(const ValidationReport& r);
json roundtrip_to_json(const RoundtripReport& r);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace thinlie::io
