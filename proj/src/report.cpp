#include "noncorr/report.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace noncorr {

Json to_json(const Decision& decision) {
    Json j;
    j["verdict"] = decision.noncorrelated() ? "noncorrelated" : "correlated";
    if (decision.witness) j["witness_m"] = *decision.witness;
    if (decision.gamma_at_witness) j["gamma_witness"] = decision.gamma_at_witness->str();
    j["elements_created"] = decision.elements_created;
    j["expansions"] = decision.expansions;
    return j;
}

Decision decision_from_json(const Json& record) {
    Decision d;
    const std::string verdict = record.at("verdict").get<std::string>();
    if (verdict == "noncorrelated")
        d.verdict = Decision::Verdict::Noncorrelated;
    else if (verdict == "correlated")
        d.verdict = Decision::Verdict::Correlated;
    else
        throw std::invalid_argument("unknown verdict '" + verdict + "'");
    if (record.contains("witness_m")) d.witness = record.at("witness_m").get<std::uint64_t>();
    if (record.contains("gamma_witness")) d.gamma_at_witness = Rational::parse(record.at("gamma_witness").get<std::string>());
    d.elements_created = record.at("elements_created").get<std::uint64_t>();
    d.expansions = record.at("expansions").get<std::uint64_t>();
    return d;
}

Json to_json(const CensusReport& report, bool include_timing) {
    Json j;
    j["base"] = report.base;
    j["length"] = report.length;
    j["filter"] = to_string(report.filter);
    j["candidates"] = report.candidates;
    j["noncorrelated"] = report.noncorrelated;
    Json by_length = Json::object();
    for (const auto& [len, count] : report.noncorrelated_by_length) by_length[std::to_string(len)] = count;
    j["noncorrelated_by_length"] = by_length;
    j["max_stored_vectors"] = report.max_stored_vectors;
    j["capacity_bound"] = capacity_bound(report.base, report.length);
    j["total_expansions"] = report.total_expansions;
    if (!report.sets.empty()) {
        Json sets = Json::array();
        for (const PatternSet& s : report.sets) sets.push_back(s.str());
        j["sets"] = sets;
    }
    if (include_timing)
        j["timing"] = {{"correlated_seconds", report.timing.correlated_seconds},
                       {"noncorrelated_seconds", report.timing.noncorrelated_seconds}};
    return j;
}

CensusReport census_report_from_json(const Json& record) {
    CensusReport r;
    r.base = record.at("base").get<unsigned>();
    r.length = record.at("length").get<unsigned>();
    r.filter = parse_census_filter(record.at("filter").get<std::string>());
    r.candidates = record.at("candidates").get<std::uint64_t>();
    r.noncorrelated = record.at("noncorrelated").get<std::uint64_t>();
    for (const auto& [key, value] : record.at("noncorrelated_by_length").items())
        r.noncorrelated_by_length[static_cast<unsigned>(std::stoul(key))] = value.get<std::uint64_t>();
    r.max_stored_vectors = record.at("max_stored_vectors").get<std::uint64_t>();
    r.total_expansions = record.at("total_expansions").get<std::uint64_t>();
    if (record.contains("sets"))
        for (const auto& s : record.at("sets")) r.sets.push_back(PatternSet::parse(s.get<std::string>(), r.base));
    if (record.contains("timing")) {
        r.timing.correlated_seconds = record["timing"].at("correlated_seconds").get<double>();
        r.timing.noncorrelated_seconds = record["timing"].at("noncorrelated_seconds").get<double>();
    }
    return r;
}

Json to_json(const Estimate& estimate) {
    Json j;
    j["value"] = estimate.value;
    j["samples"] = estimate.samples;
    j["m"] = estimate.shift;
    if (estimate.residue) j["residue"] = *estimate.residue;
    return j;
}

Json to_json(const EquivalenceReport& report) {
    Json j;
    j["max_length"] = report.max_length;
    Json strata = Json::object();
    for (const auto& [len, s] : report.strata)
        strata[std::to_string(len)] = {
            {"candidates", s.candidates}, {"noncorrelated", s.noncorrelated}, {"saturated", s.saturated}};
    j["strata"] = strata;
    Json counter = Json::array();
    for (const PatternSet& p : report.counterexamples) counter.push_back(p.str());
    j["counterexamples"] = counter;
    j["holds"] = report.holds();
    return j;
}

Json to_json(const SaturationResult& result) {
    Json j;
    j["saturated"] = result.saturated;
    if (result.violation)
        j["violation"] = {{"u", result.violation->u.str()}, {"i0", result.violation->i0}, {"i1", result.violation->i1}};
    return j;
}

void write_list_file(std::ostream& os, const std::vector<PatternSet>& sets) {
    for (const PatternSet& s : sets) os << (s.empty() ? "-" : s.str()) << '\n';
}

std::vector<PatternSet> read_list_file(std::istream& is, unsigned base) {
    std::vector<PatternSet> out;
    std::string line;
    while (std::getline(is, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) line.pop_back();
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.erase(0, 1);
        if (line.empty()) continue;
        out.push_back(line == "-" ? PatternSet(base) : PatternSet::parse(line, base));
    }
    return out;
}

}  // namespace noncorr
