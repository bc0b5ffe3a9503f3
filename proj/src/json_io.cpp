#include "sf/json_io.hpp"

namespace sf {

json subset_to_json(const GroupSubset& s)
{
    return json(s.elements());
}

GroupSubset subset_from_json(const AbelianGroup& g, const json& j)
{
    std::vector<element_t> xs = j.get<std::vector<element_t>>();
    return GroupSubset::from_elements(g, xs);
}

json subgroup_to_json(const Subgroup& s)
{
    return json{{"members", subset_to_json(s.members)},
                {"rank2", s.rank2},
                {"index", s.index}};
}

json hom_to_json(const ZpHom& h)
{
    return json{{"p", h.p}, {"gen_images", h.gen_images}};
}

json linkgraph_to_json(const LinkGraph& l)
{
    json edges = json::array();
    for (auto [u, v, t] : l.typed_edges())
        edges.push_back(json{{"u", u}, {"v", v}, {"type", t}});
    return json{{"source", subset_to_json(l.source)},
                {"vertices", l.vertices},
                {"edges", edges},
                {"loops", subset_to_json(l.loops)}};
}

json family_to_json(const ConstructionFamily& f)
{
    json j{{"kind", f.kind_str()},
           {"group", f.group->spec_string()},
           {"distinct_freeness", f.distinct_freeness},
           {"expected_count", f.expected_count}};
    if (f.subgroup_h.attached()) j["subgroup_h"] = subset_to_json(f.subgroup_h);
    if (f.gen) j["g"] = *f.gen;
    if (f.shift) j["s"] = *f.shift;
    if (f.coset_rep) j["coset_rep"] = *f.coset_rep;
    json sets = json::array();
    for (const GroupSubset& s : f.sets) sets.push_back(subset_to_json(s));
    j["sets"] = std::move(sets);
    return j;
}

json family_check_to_json(const FamilyCheck& c)
{
    return json{{"count_ok", c.count_ok},
                {"freeness_ok", c.freeness_ok},
                {"conflicts_ok", c.conflicts_ok},
                {"pairs_checked", c.pairs_checked},
                {"sampled", c.sampled},
                {"ok", c.ok()}};
}

json degree_profile_to_json(const DegreeProfile& p)
{
    return json{{"d1", p.d1},
                {"d2", p.d2},
                {"delta", p.delta},
                {"Delta", p.Delta},
                {"setting_ok", p.setting_ok},
                {"claims_ok", p.claims_ok},
                {"warning", p.warning}};
}

json edge_counts_to_json(const EdgeCounts& e)
{
    return json{{"e1", e.e1},
                {"e2", e.e2},
                {"total", e.total},
                {"lower_bound", e.lower_bound},
                {"setting_ok", e.setting_ok},
                {"bound_ok", e.bound_ok}};
}

json component_tally_to_json(const ComponentTally& t)
{
    json other = json::array();
    for (auto [size, count] : t.other)
        other.push_back(json{{"size", size}, {"count", count}});
    return json{{"K1", t.k1}, {"K2", t.k2}, {"K3", t.k3}, {"K4", t.k4},
                {"C4", t.c4}, {"C3xK2", t.prism}, {"other", other}};
}

json census_report_to_json(const CensusReport& r)
{
    json j{{"group", r.group_spec}, {"seconds", r.seconds}};
    if (r.f) j["f"] = *r.f;
    if (r.f_star) j["f_star"] = *r.f_star;
    if (r.f_max) j["f_max"] = *r.f_max;
    if (r.f_star_max) j["f_star_max"] = *r.f_star_max;
    if (r.witnesses) {
        json ws = json::array();
        for (const GroupSubset& w : *r.witnesses) ws.push_back(subset_to_json(w));
        j["witnesses"] = std::move(ws);
    }
    return j;
}

CensusReport census_report_from_json(const json& j)
{
    CensusReport r;
    r.group_spec = j.at("group").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    if (j.contains("f")) r.f = j["f"].get<std::uint64_t>();
    if (j.contains("f_star")) r.f_star = j["f_star"].get<std::uint64_t>();
    if (j.contains("f_max")) r.f_max = j["f_max"].get<std::uint64_t>();
    if (j.contains("f_star_max")) r.f_star_max = j["f_star_max"].get<std::uint64_t>();
    return r;
}

namespace {

json edge_lists_to_json(const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& ls)
{
    json out = json::array();
    for (const auto& edges : ls) {
        json one = json::array();
        for (auto [u, v] : edges) one.push_back(json::array({u, v}));
        out.push_back(std::move(one));
    }
    return out;
}

std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> edge_lists_from_json(const json& j)
{
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out;
    for (const auto& one : j) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (const auto& e : one)
            edges.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
        out.push_back(std::move(edges));
    }
    return out;
}

}  // namespace

json scan_report_to_json(const ScanReport& r)
{
    return json{{"n", r.n},
                {"mode", r.mode},
                {"seed", r.seed},
                {"budget", r.budget},
                {"graphs_checked", r.graphs_checked},
                {"max_mis", r.max_mis},
                {"bound", r.bound},
                {"attainers", edge_lists_to_json(r.attainers)},
                {"attainers_total", r.attainers_total},
                {"counterexamples", edge_lists_to_json(r.counterexamples)},
                {"partial", r.partial}};
}

ScanReport scan_report_from_json(const json& j)
{
    ScanReport r;
    r.n = j.at("n").get<std::uint32_t>();
    r.mode = j.at("mode").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.budget = j.at("budget").get<std::uint64_t>();
    r.graphs_checked = j.at("graphs_checked").get<std::uint64_t>();
    r.max_mis = j.at("max_mis").get<std::uint64_t>();
    r.bound = j.at("bound").get<std::uint64_t>();
    r.attainers = edge_lists_from_json(j.at("attainers"));
    r.attainers_total = j.at("attainers_total").get<std::uint64_t>();
    r.counterexamples = edge_lists_from_json(j.at("counterexamples"));
    r.partial = j.at("partial").get<bool>();
    return r;
}

json gnp_sample_to_json(const GnpSample& s)
{
    return json{{"p", s.p},
                {"trial", s.trial},
                {"derived_seed", s.derived_seed},
                {"sample", s.sample},
                {"largest_sumfree", s.largest_sumfree},
                {"ratio", s.ratio}};
}

GnpSample gnp_sample_from_json(const json& j)
{
    GnpSample s;
    s.p = j.at("p").get<double>();
    s.trial = j.at("trial").get<std::uint64_t>();
    s.derived_seed = j.at("derived_seed").get<std::uint64_t>();
    s.sample = j.at("sample").get<std::vector<element_t>>();
    s.largest_sumfree = j.at("largest_sumfree").get<std::uint32_t>();
    s.ratio = j.at("ratio").get<double>();
    return s;
}

std::string gnp_to_jsonl(const std::vector<GnpSample>& samples)
{
    std::string out;
    for (const GnpSample& s : samples) {
        out += gnp_sample_to_json(s).dump();
        out += '\n';
    }
    return out;
}

json claims_report_to_json(const ClaimsReport& r)
{
    return json{{"group", r.group_spec},
                {"pairs_00", r.pairs_00},
                {"pairs_0s", r.pairs_0s},
                {"pairs_ss", r.pairs_ss},
                {"max_common_00", r.max_common_00},
                {"max_common_0s", r.max_common_0s},
                {"max_common_ss", r.max_common_ss},
                {"bound_ss", r.bound_ss},
                {"ok_00", r.ok_00},
                {"ok_0s", r.ok_0s},
                {"ok_ss", r.ok_ss},
                {"ok", r.ok()}};
}

std::string census_report_to_csv(const CensusReport& r)
{
    auto cell = [](const std::optional<std::uint64_t>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    std::string out = "group,f,f_star,f_max,f_star_max,seconds\n";
    out += "\"" + r.group_spec + "\"," + cell(r.f) + "," + cell(r.f_star) + "," +
           cell(r.f_max) + "," + cell(r.f_star_max) + "," + std::to_string(r.seconds) + "\n";
    return out;
}

}  // namespace sf
