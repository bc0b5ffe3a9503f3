// Command-line surface for the sum-free-set toolkit.  Every subcommand is
// deterministic given its full flag set (seed included) and embeds a config
// echo in its report.  Exit codes: 0 success, 1 violated invariant or
// counterexample found, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sf/census.hpp"
#include "sf/json_io.hpp"
#include "sf/linkgraph.hpp"
#include "sf/mis.hpp"
#include "sf/subset.hpp"
#include "sf/sumfree.hpp"

using namespace sf;

namespace {

struct GlobalOpts {
    std::string format = "text";  // text | json | csv
    std::string out_path;
    std::uint64_t seed = kDefaultSeed;
    std::uint32_t workers = 1;
    std::uint64_t budget = 1000000;
    std::uint32_t max_n = 0;  // 0: only the per-operation caps apply
};

void add_global_flags(CLI::App* cmd, GlobalOpts& g)
{
    cmd->add_option("--format,-f", g.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out,-o", g.out_path, "write the report to this file");
    cmd->add_option("--seed", g.seed, "seed for every randomized step");
    cmd->add_option("--workers", g.workers, "worker threads");
    cmd->add_option("--budget", g.budget, "graph/sample budget for scans");
    cmd->add_option("--max-n", g.max_n, "refuse groups larger than this");
}

void emit(const GlobalOpts& g, const std::string& text)
{
    if (g.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + g.out_path);
    out << text;
}

json config_echo(const GlobalOpts& g, const std::string& cmd, const std::string& group_spec)
{
    json j{{"command", cmd},
           {"format", g.format},
           {"seed", g.seed},
           {"workers", g.workers},
           {"budget", g.budget}};
    if (!group_spec.empty()) j["group"] = group_spec;
    if (g.max_n) j["max_n"] = g.max_n;
    return j;
}

std::string config_line(const json& cfg)
{
    return "config: " + cfg.dump();
}

AbelianGroup make_group_checked(const GlobalOpts& g, const std::string& spec)
{
    AbelianGroup grp = parse_group_spec(spec);
    if (g.max_n && grp.order() > g.max_n)
        throw std::invalid_argument("group order " + std::to_string(grp.order()) +
                                    " exceeds --max-n " + std::to_string(g.max_n));
    return grp;
}

std::vector<element_t> parse_element_list(const std::string& text)
{
    std::vector<element_t> out;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) throw std::invalid_argument("element list: empty entry");
        out.push_back(element_t(std::stoul(token)));
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (c == ',') flush();
        else if (c >= '0' && c <= '9') token += c;
        else throw std::invalid_argument("element list: bad character");
    }
    if (!token.empty()) flush();
    return out;
}

// ---- subcommand handlers ------------------------------------------------

int cmd_classify(const GlobalOpts& g, const std::string& spec)
{
    AbelianGroup grp = make_group_checked(g, spec);
    GroupType t = classify(grp);
    std::uint64_t mu_g = mu(grp);
    json cfg = config_echo(g, "classify", grp.spec_string());
    if (g.format == "text") {
        emit(g, config_line(cfg) + "\n" + t.str() + ", mu=" + std::to_string(mu_g));
    } else {
        json j{{"config", cfg},       {"group", grp.spec_string()},
               {"n", grp.order()},    {"type", t.str()},
               {"mu", mu_g},          {"r1", grp.r1()},
               {"r2", grp.r2()},      {"r", grp.two_rank()},
               {"exponent", grp.exponent()}, {"odd_part", grp.odd_part_order()}};
        emit(g, j.dump(2));
    }
    return 0;
}

int cmd_mu(const GlobalOpts& g, const std::string& spec)
{
    AbelianGroup grp = make_group_checked(g, spec);
    std::uint64_t mu_g = mu(grp);
    json cfg = config_echo(g, "mu", grp.spec_string());
    if (g.format == "text")
        emit(g, config_line(cfg) + "\n" + std::to_string(mu_g));
    else
        emit(g, json{{"config", cfg}, {"group", grp.spec_string()}, {"mu", mu_g}}.dump(2));
    return 0;
}

int cmd_subgroups(const GlobalOpts& g, const std::string& spec, std::uint32_t prime_index,
                  std::uint32_t count_order)
{
    AbelianGroup grp = make_group_checked(g, spec);
    json cfg = config_echo(g, "subgroups", grp.spec_string());
    json j{{"config", cfg}, {"group", grp.spec_string()}};

    if (count_order) {
        j["order"] = count_order;
        j["count"] = count_subgroups_of_order(grp, count_order);
    } else if (prime_index) {
        json subs = json::array();
        for (const auto& pis : subgroups_of_prime_index(grp, prime_index)) {
            json one = subgroup_to_json(pis.sub);
            one["hom"] = hom_to_json(pis.hom);
            subs.push_back(std::move(one));
        }
        j["prime_index"] = prime_index;
        j["subgroups"] = std::move(subs);
    } else {
        json subs = json::array();
        for (const Subgroup& s : index2_subgroups(grp)) subs.push_back(subgroup_to_json(s));
        j["subgroups"] = std::move(subs);
    }

    if (g.format == "text") {
        std::string out = config_line(cfg) + "\n";
        if (count_order) {
            out += "subgroups of order " + std::to_string(count_order) + ": " +
                   j["count"].dump() + "\n";
        } else {
            for (const json& s : j["subgroups"])
                out += "members=" + s["members"].dump() + " rank2=" + s["rank2"].dump() +
                       " index=" + s["index"].dump() + "\n";
        }
        emit(g, out);
    } else {
        emit(g, j.dump(2));
    }
    return 0;
}

int cmd_census(const GlobalOpts& g, const std::string& spec, bool distinct, bool maximal,
               bool all, bool witnesses)
{
    AbelianGroup grp = make_group_checked(g, spec);
    CensusOptions opts{witnesses, g.workers};
    CensusReport rep = (all || g.format == "csv")
                           ? census_full(grp, opts)
                           : census(grp, distinct, maximal, opts);
    json cfg = config_echo(g, "census", grp.spec_string());
    cfg["distinct"] = distinct;
    cfg["maximal"] = maximal;
    if (g.format == "csv") {
        emit(g, "# " + config_line(cfg) + "\n" + census_report_to_csv(rep));
    } else if (g.format == "json") {
        json j = census_report_to_json(rep);
        j["config"] = cfg;
        emit(g, j.dump(2));
    } else {
        std::string out = config_line(cfg) + "\n";
        json j = census_report_to_json(rep);
        for (const char* key : {"f", "f_star", "f_max", "f_star_max"})
            if (j.contains(key)) out += std::string(key) + " = " + j[key].dump() + "\n";
        out += "seconds = " + std::to_string(rep.seconds) + "\n";
        emit(g, out);
    }
    return 0;
}

int cmd_linkgraph(const GlobalOpts& g, const std::string& spec, const std::string& s_list,
                  const std::string& b_list)
{
    AbelianGroup grp = make_group_checked(g, spec);
    GroupSubset s = GroupSubset::from_elements(grp, parse_element_list(s_list));
    GroupSubset b = GroupSubset::from_elements(grp, parse_element_list(b_list));
    LinkGraph l = build_link_graph(grp, s, b);
    DegreeProfile prof = degree_profile(l);
    EdgeCounts ec = edge_counts(l);
    ComponentTally tally = component_census(l);

    json cfg = config_echo(g, "linkgraph", grp.spec_string());
    cfg["S"] = subset_to_json(s);
    cfg["B"] = subset_to_json(b);
    json j{{"config", cfg},
           {"graph", linkgraph_to_json(l)},
           {"degree_profile", degree_profile_to_json(prof)},
           {"edge_counts", edge_counts_to_json(ec)},
           {"components", component_tally_to_json(tally)}};

    bool violated = (prof.setting_ok && !prof.claims_ok) || (ec.setting_ok && !ec.bound_ok);
    if (g.format == "text") {
        std::string out = config_line(cfg) + "\n";
        out += "vertices=" + std::to_string(l.vertex_count()) +
               " e1=" + std::to_string(ec.e1) + " e2=" + std::to_string(ec.e2) +
               " loops=" + std::to_string(l.loops.size()) + "\n";
        for (auto [u, v, t] : l.typed_edges())
            out += std::to_string(u) + " -- " + std::to_string(v) + "  type " +
                   std::to_string(t) + "\n";
        if (!prof.warning.empty()) out += prof.warning + "\n";
        emit(g, out);
    } else {
        emit(g, j.dump(2));
    }
    return violated ? 1 : 0;
}

int cmd_construct(const GlobalOpts& g, const std::string& spec, const std::string& family,
                  bool verify)
{
    AbelianGroup grp = make_group_checked(g, spec);
    ConstructionFamily fam;
    if (family == "prop32") fam = construct_prop32(grp);
    else if (family == "z5k") fam = construct_z5k(grp);
    else if (family == "prop53") fam = construct_prop53(grp);
    else throw std::invalid_argument("unknown family " + family);

    json cfg = config_echo(g, "construct", grp.spec_string());
    cfg["family"] = family;
    json j{{"config", cfg}, {"family", family_to_json(fam)}};
    bool ok = true;
    if (verify) {
        FamilyCheck chk = verify_family(fam, g.seed);
        ok = chk.ok();
        j["check"] = family_check_to_json(chk);
    }
    if (g.format == "text") {
        std::string out = config_line(cfg) + "\n";
        out += "sets emitted: " + std::to_string(fam.sets.size()) +
               " (expected " + std::to_string(fam.expected_count) + ")\n";
        if (verify) out += std::string("verification: ") + (ok ? "ok" : "FAILED") + "\n";
        emit(g, out);
    } else {
        emit(g, j.dump(2));
    }
    return ok ? 0 : 1;
}

int cmd_conjecture_mis(const GlobalOpts& g, std::uint32_t n, const std::string& mode,
                       const std::string& graph_file)
{
    ScanReport rep;
    if (!graph_file.empty()) {
        std::ifstream in(graph_file, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot read graph file " + graph_file);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        rep = conjecture53_check_graph(parse_graph_text(text));
    } else {
        ScanMode m = mode == "random" ? ScanMode::random : ScanMode::exhaustive;
        rep = conjecture53_scan(n, m, g.budget, g.seed, g.workers);
    }
    json cfg = config_echo(g, "conjecture-mis", "");
    cfg["n"] = rep.n;
    cfg["mode"] = rep.mode;
    if (!graph_file.empty()) cfg["graph_file"] = graph_file;
    json j = scan_report_to_json(rep);
    j["config"] = cfg;
    if (g.format == "text") {
        std::string out = config_line(cfg) + "\n";
        out += "graphs checked: " + std::to_string(rep.graphs_checked) + "\n";
        out += "max mis: " + std::to_string(rep.max_mis) + " (bound " +
               std::to_string(rep.bound) + ")\n";
        out += "attainers: " + std::to_string(rep.attainers_total) + "\n";
        out += "counterexamples: " + std::to_string(rep.counterexamples.size()) + "\n";
        if (rep.partial) out += "budget exhausted: partial scan\n";
        emit(g, out);
    } else {
        emit(g, j.dump(2));
    }
    return rep.found_counterexample() ? 1 : 0;
}

int cmd_gnp(const GlobalOpts& g, const std::string& spec, double p, std::uint32_t trials,
            bool resample)
{
    AbelianGroup grp = make_group_checked(g, spec);
    GnpOptions opts;
    opts.workers = g.workers;
    opts.resample_oversize = resample;
    auto samples = gnp_experiment(grp, p, trials, g.seed, opts);

    json cfg = config_echo(g, "gnp", grp.spec_string());
    cfg["p"] = p;
    cfg["trials"] = trials;
    if (g.format == "csv") {
        std::string out = "# " + config_line(cfg) + "\n";
        out += "trial,p,derived_seed,sample_size,largest_sumfree,ratio\n";
        for (const GnpSample& s : samples)
            out += std::to_string(s.trial) + "," + json(s.p).dump() + "," +
                   std::to_string(s.derived_seed) + "," + std::to_string(s.sample.size()) +
                   "," + std::to_string(s.largest_sumfree) + "," + json(s.ratio).dump() + "\n";
        emit(g, out);
    } else if (g.format == "json") {
        // JSON-lines: a config echo line, then one sample per line
        std::string out = json{{"config", cfg}}.dump() + "\n" + gnp_to_jsonl(samples);
        emit(g, out);
    } else {
        double mean = 0;
        for (const GnpSample& s : samples) mean += s.ratio;
        mean /= double(samples.size());
        std::string out = config_line(cfg) + "\n";
        out += "trials: " + std::to_string(samples.size()) + "\n";
        out += "mean ratio: " + json(mean).dump() + "\n";
        emit(g, out);
    }
    return 0;
}

int cmd_verify_claims(const GlobalOpts& g, const std::string& spec)
{
    AbelianGroup grp = make_group_checked(g, spec);
    ClaimsReport rep = verify_claims_512_515(grp);
    json cfg = config_echo(g, "verify-claims", grp.spec_string());
    json j = claims_report_to_json(rep);
    j["config"] = cfg;
    if (g.format == "text") {
        std::string out = config_line(cfg) + "\n";
        out += "zero/zero pairs: " + std::to_string(rep.pairs_00) +
               ", max common " + std::to_string(rep.max_common_00) + " (<= 1)\n";
        out += "mixed pairs: " + std::to_string(rep.pairs_0s) + ", max common " +
               std::to_string(rep.max_common_0s) + " (= 0)\n";
        out += "shifted pairs: " + std::to_string(rep.pairs_ss) + ", max common " +
               std::to_string(rep.max_common_ss) + " (<= " + json(rep.bound_ss).dump() +
               ")\n";
        out += std::string("result: ") + (rep.ok() ? "ok" : "VIOLATED") + "\n";
        emit(g, out);
    } else {
        emit(g, j.dump(2));
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact enumeration toolkit for sum-free sets in finite abelian groups"};
    app.require_subcommand(1);
    GlobalOpts g;

    std::string spec, s_list, b_list, family = "prop53", mode = "exhaustive", graph_file;
    bool distinct = false, maximal = false, all = false, witnesses = false;
    bool no_verify = false, resample = false;
    std::uint32_t n = 6, prime_index = 0, count_order = 0, trials = 100;
    double p = 0.5;

    auto* c_classify = app.add_subcommand("classify", "group type and mu");
    c_classify->add_option("spec", spec, "group spec, e.g. 4,2,3")->required();
    add_global_flags(c_classify, g);

    auto* c_mu = app.add_subcommand("mu", "largest sum-free subset size");
    c_mu->add_option("spec", spec)->required();
    add_global_flags(c_mu, g);

    auto* c_sub = app.add_subcommand("subgroups", "index-2 (default) or prime-index subgroups");
    c_sub->add_option("spec", spec)->required();
    c_sub->add_option("--prime-index", prime_index, "list kernels of homs onto Z_p");
    c_sub->add_option("--count-order", count_order, "count subgroups of this order");
    add_global_flags(c_sub, g);

    auto* c_census = app.add_subcommand("census", "exhaustive sum-free counts");
    c_census->add_option("spec", spec)->required();
    c_census->add_flag("--distinct", distinct, "count distinct sum-free sets");
    c_census->add_flag("--maximal", maximal, "count only maximal sets");
    c_census->add_flag("--all", all, "compute all four counts");
    c_census->add_flag("--witnesses", witnesses, "list the maximal sets");
    add_global_flags(c_census, g);

    auto* c_link = app.add_subcommand("linkgraph", "build the distinct link graph of S on B");
    c_link->add_option("spec", spec)->required();
    c_link->add_option("--s", s_list, "source set S as element indices")->required();
    c_link->add_option("--b", b_list, "vertex set B as element indices")->required();
    add_global_flags(c_link, g);

    auto* c_cons = app.add_subcommand("construct", "emit a pairwise-conflicting family");
    c_cons->add_option("spec", spec)->required();
    c_cons->add_option("--family", family, "prop32, z5k or prop53")
        ->check(CLI::IsMember({"prop32", "z5k", "prop53"}));
    c_cons->add_flag("--no-verify", no_verify, "skip the family verification");
    add_global_flags(c_cons, g);

    auto* c_conj = app.add_subcommand("conjecture-mis",
                                      "scan perfect-matching graphs for mis > 2^{n/2}");
    c_conj->add_option("--n", n, "vertex count (even)");
    c_conj->add_option("--mode", mode, "exhaustive or random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    c_conj->add_option("--graph", graph_file, "check one graph in text format");
    add_global_flags(c_conj, g);

    auto* c_gnp = app.add_subcommand("gnp", "random-subset largest-sum-free experiment");
    c_gnp->add_option("spec", spec)->required();
    c_gnp->add_option("--p", p, "keep probability")->required();
    c_gnp->add_option("--trials", trials, "number of trials");
    c_gnp->add_flag("--resample-oversize", resample, "redraw oversized samples");
    add_global_flags(c_gnp, g);

    auto* c_ver = app.add_subcommand("verify-claims", "pairwise overlap checks on cosets");
    c_ver->add_option("spec", spec)->required();
    add_global_flags(c_ver, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_classify)) return cmd_classify(g, spec);
        if (app.got_subcommand(c_mu)) return cmd_mu(g, spec);
        if (app.got_subcommand(c_sub)) return cmd_subgroups(g, spec, prime_index, count_order);
        if (app.got_subcommand(c_census))
            return cmd_census(g, spec, distinct, maximal, all, witnesses);
        if (app.got_subcommand(c_link)) return cmd_linkgraph(g, spec, s_list, b_list);
        if (app.got_subcommand(c_cons)) return cmd_construct(g, spec, family, !no_verify);
        if (app.got_subcommand(c_conj)) return cmd_conjecture_mis(g, n, mode, graph_file);
        if (app.got_subcommand(c_gnp)) return cmd_gnp(g, spec, p, trials, resample);
        if (app.got_subcommand(c_ver)) return cmd_verify_claims(g, spec);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
