#pragma once

#include <string>

#include <json.hpp>

#include "deephole/distance.hpp"
#include "deephole/tables.hpp"

namespace deephole {

// JSON forms of the report types. Keys are emitted in a fixed insertion
// order (nlohmann::ordered_json) so serialized reports are directly
// comparable; wall-clock timings live under a single "timing" key that
// comparisons are expected to strip (see strip_timing).
using json = nlohmann::ordered_json;

json to_json(const Field& field);
json code_descriptor(const RSCode& code);
json code_descriptor(const CyclicRSCode& code);
json to_json(const DistanceReport& report);
json to_json(const CyclicDistanceReport& report);
json to_json(const VerificationSummary& summary);
json to_json(const CensusReport& report);
json to_json(const TableReport& report);

/// Removes every "timing" object (recursively); reports are byte-equal
/// across worker counts only after this.
json strip_timing(json value);

/// CSV mirroring the reference-table columns:
/// received_word,interpolant,codeword_v,d_u_v,exact_distance,is_deep_hole
std::string to_csv(const TableReport& report);
/// CSV of census results, one row per deep hole found (header always).
std::string to_csv(const CensusReport& report);

}  // namespace deephole
