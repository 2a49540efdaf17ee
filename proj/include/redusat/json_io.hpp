#pragma once

#include <string>

#include "json.hpp"
#include "redusat/bench.hpp"
#include "redusat/closure.hpp"
#include "redusat/harness.hpp"
#include "redusat/resolution.hpp"
#include "redusat/solver.hpp"

namespace redusat {

// Insertion-ordered JSON: emission order is fixed by the code, so equal
// reports serialise to identical bytes.
using json = nlohmann::ordered_json;

json closure_json(const ClosureResult& r, const Formula& f);
json solve_json(const SolveOutcome& s, bool include_trace);
json oracle_json(const OracleVerdict& v);
json probe_json(const ProbeReport& r);
json finding_json(const Finding& fd);
json campaign_json(const CampaignReport& rep);
json probe_campaign_json(const ProbeCampaignReport& rep);
json bench_json(const BenchReport& rep);

/// 2-space indentation plus trailing newline.
std::string dump_json(const json& j);

/// One .cnf (shrunk form when present) plus one .json sidecar per finding,
/// under dir (created if needed). Returns the number of bundles written.
std::size_t write_campaign_bundles(const std::string& dir, const CampaignReport& rep);
std::size_t write_probe_bundles(const std::string& dir, const ProbeCampaignReport& rep);

}  // namespace redusat
