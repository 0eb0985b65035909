#pragma once

#include <string>

#include <json.hpp>

#include "maniplex/analysis.hpp"
#include "maniplex/census.hpp"
#include "maniplex/string_rep.hpp"

namespace maniplex {

using json = nlohmann::ordered_json;

// Field elements serialize as coefficient lists, low-degree first; group
// elements as row-major lists of those; a representation as
// {q, family, rank, generators}.
json element_json(const Field& F, uint32_t element);
json matrix_json(const GroupContext& G, uint32_t index);
json rep_json(const StringRep& rep);

// Reads {q, family, rank, generators}, enumerating the context. Extra keys
// are ignored so emitted summary objects round-trip.
StringRep rep_from_json(const json& j);

json summary_json(const StringRep& rep, const ManiplexSummary& s);
std::string summary_text(const ManiplexSummary& s);

std::string csv_header();
std::string csv_row(const StringRep& rep, const ManiplexSummary& s);

json validation_json(const ValidationReport& report);
json stats_json(const CensusStats& stats);
json theorem_report_json(const TheoremReport& report);
std::string theorem_report_text(const TheoremReport& report);

}  // namespace maniplex
