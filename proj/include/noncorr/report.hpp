#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "noncorr/classify.hpp"
#include "noncorr/decider.hpp"
#include "noncorr/oracle.hpp"

namespace noncorr {

using Json = nlohmann::ordered_json;

Json to_json(const Decision& decision);
Decision decision_from_json(const Json& record);

/// Timing is left out unless asked for, so that reports of identical runs compare equal byte for byte.
Json to_json(const CensusReport& report, bool include_timing = false);
CensusReport census_report_from_json(const Json& record);

Json to_json(const Estimate& estimate);
Json to_json(const EquivalenceReport& report);
Json to_json(const SaturationResult& result);

/// One pattern set per line; '#' starts a comment; a line holding only "-" is the empty set.
void write_list_file(std::ostream& os, const std::vector<PatternSet>& sets);
std::vector<PatternSet> read_list_file(std::istream& is, unsigned base);

}  // namespace noncorr
