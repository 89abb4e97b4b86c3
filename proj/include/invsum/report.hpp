#pragma once

// JSON encodings of the library's result types. Sets are written as
// set literals ("0-13,26,52") so that they parse back with parse_set.

#include <json.hpp>

#include <string>

#include "invsum/intset.hpp"
#include "invsum/isomorphism.hpp"
#include "invsum/progressions.hpp"
#include "invsum/search.hpp"
#include "invsum/structure.hpp"
#include "invsum/sumset.hpp"
#include "invsum/verify.hpp"

namespace invsum {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

void to_json(json& j, const IntSet& a);
void from_json(const json& j, IntSet& a);
void to_json(json& j, const NormalForm& nf);
void to_json(json& j, const SumsetStats& s);
void from_json(const json& j, SumsetStats& s);
void to_json(json& j, const ApWindow& w);
void from_json(const json& j, ApWindow& w);
void to_json(json& j, const BpCover& c);
void from_json(const json& j, BpCover& c);
void to_json(json& j, const Verdict& v);
void to_json(json& j, const ResidueDecomposition& r);
void to_json(json& j, const TriangleVerdict& t);
void to_json(json& j, const StructureReport& r);
void to_json(json& j, const Violation& v);
void from_json(const json& j, Violation& v);
void to_json(json& j, const ClaimSummary& c);
void from_json(const json& j, ClaimSummary& c);
void to_json(json& j, const SweepSummary& s);
void from_json(const json& j, SweepSummary& s);
void to_json(json& j, const SearchRecord& r);
void from_json(const json& j, SearchRecord& r);
void to_json(json& j, const SearchResult& r);
void to_json(json& j, const RatioHistogram& h);
void to_json(json& j, const FamilyRow& r);
void to_json(json& j, const TwoLinesEmbedding& e);

/// {schema_version, tool, tool_version, command, input, result, wall_time_ms}
json envelope(const std::string& command, json input, json result, double wall_time_ms);

/// Indented "key: value" rendering of any JSON value; the --pretty view.
std::string pretty(const json& j);

/// Histogram rows as CSV with a header line.
std::string histogram_csv(const RatioHistogram& h);

}  // namespace invsum
