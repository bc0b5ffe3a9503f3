#pragma once

#include <string>

#include <json.hpp>

#include "sf/census.hpp"
#include "sf/linkgraph.hpp"
#include "sf/mis.hpp"
#include "sf/subset.hpp"
#include "sf/sumfree.hpp"

namespace sf {

using json = nlohmann::json;

// Sets serialise as sorted element-index lists.
json subset_to_json(const GroupSubset& s);
GroupSubset subset_from_json(const AbelianGroup& g, const json& j);

json subgroup_to_json(const Subgroup& s);

json hom_to_json(const ZpHom& h);

json linkgraph_to_json(const LinkGraph& l);

json family_to_json(const ConstructionFamily& f);
json family_check_to_json(const FamilyCheck& c);

json degree_profile_to_json(const DegreeProfile& p);
json edge_counts_to_json(const EdgeCounts& e);
json component_tally_to_json(const ComponentTally& t);

json census_report_to_json(const CensusReport& r);
CensusReport census_report_from_json(const json& j);

json scan_report_to_json(const ScanReport& r);
ScanReport scan_report_from_json(const json& j);

json gnp_sample_to_json(const GnpSample& s);
GnpSample gnp_sample_from_json(const json& j);
std::string gnp_to_jsonl(const std::vector<GnpSample>& samples);

json claims_report_to_json(const ClaimsReport& r);

// CSV export for census reports: header plus one row of
// (group, f, f_star, f_max, f_star_max, seconds).  Missing counts print
// as empty cells.
std::string census_report_to_csv(const CensusReport& r);

}  // namespace sf
