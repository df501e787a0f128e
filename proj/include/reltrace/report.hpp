#pragma once

// Human-readable and JSON renderings of results. JSON output is canonical:
// fixed key order (nlohmann sorts object keys) and library ordering of traces,
// so identical inputs give byte-identical documents.

#include <string>
#include <vector>

#include "json.hpp"
#include "reltrace/cohomology.hpp"
#include "reltrace/consistency.hpp"
#include "reltrace/frame.hpp"
#include "reltrace/laws.hpp"
#include "reltrace/relation.hpp"
#include "reltrace/topology.hpp"

namespace reltrace {

/// "{a,b} {b,c}"
std::string format_cover(const VariableTable& vars, const MaximalCover& cover);
nlohmann::json cover_json(const VariableTable& vars, const MaximalCover& cover);

std::string relation_text(const Frame& frame, const std::string& name, const Relation& r);
nlohmann::json relation_json(const Frame& frame, const Relation& r);

/// "locally consistent", or "locally inconsistent" with the first failing pair.
std::string local_verdict(const Knowledgebase& k, const ConsistencyReport& r);
/// "globally consistent", "globally inconsistent, γ = ∅" or
/// "globally inconsistent, |γ| = n".
std::string global_verdict(const ConsistencyReport& r);

/// With `global` false only the local part is rendered.
std::string consistency_text(const Frame& frame, const Knowledgebase& k, const ConsistencyReport& r, bool global);
nlohmann::json consistency_json(const Frame& frame, const Knowledgebase& k, const ConsistencyReport& r, bool global);

struct CohomologySummary {
  ChainComplex complex;
  std::vector<CohomologyResult> degrees;  // -1 .. top_degree()
};

CohomologySummary summarize_cohomology(const Subpresheaf& a, const MaximalCover& cover, Ring ring);
/// With `matrices`, every coboundary follows as "d^p  rows x cols" and one
/// line of space-separated entries per row.
std::string cohomology_text(const Frame& frame, const CohomologySummary& s, bool matrices);
nlohmann::json cohomology_json(const Frame& frame, const CohomologySummary& s, bool matrices);

std::string laws_text(const std::vector<LawResult>& results);
nlohmann::json laws_json(const std::vector<LawResult>& results);

}  // namespace reltrace
