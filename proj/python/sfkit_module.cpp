// Python bindings for the main operations.  Reports cross the boundary as
// plain dicts/lists (round-tripped through the JSON layer), element sets as
// lists of indices.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sf/census.hpp"
#include "sf/json_io.hpp"
#include "sf/linkgraph.hpp"
#include "sf/mis.hpp"
#include "sf/subset.hpp"
#include "sf/sumfree.hpp"

namespace py = pybind11;
using namespace sf;

namespace {

py::object json_to_py(const json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

GroupSubset subset_of(const AbelianGroup& g, const std::vector<element_t>& xs)
{
    return GroupSubset::from_elements(g, xs);
}

SimpleGraph graph_of(std::uint32_t n,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                     const std::vector<std::uint32_t>& forbidden)
{
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    for (std::uint32_t v : forbidden) {
        if (v >= n) throw std::invalid_argument("forbidden vertex out of range");
        g.forbidden |= std::uint64_t(1) << v;
    }
    return g;
}

}  // namespace

PYBIND11_MODULE(sfkit, m)
{
    m.doc() = "exact enumeration toolkit for sum-free sets in finite abelian groups";

    py::class_<AbelianGroup>(m, "Group")
        .def(py::init<std::vector<std::uint32_t>>(), py::arg("factor_orders"))
        .def_property_readonly("n", &AbelianGroup::order)
        .def_property_readonly("factors", &AbelianGroup::factors)
        .def_property_readonly("r1", &AbelianGroup::r1)
        .def_property_readonly("r2", &AbelianGroup::r2)
        .def_property_readonly("r", &AbelianGroup::two_rank)
        .def_property_readonly("exponent", &AbelianGroup::exponent)
        .def_property_readonly("odd_part", &AbelianGroup::odd_part_order)
        .def("add", &AbelianGroup::add)
        .def("neg", &AbelianGroup::neg)
        .def("sub", &AbelianGroup::sub)
        .def("decode", &AbelianGroup::decode)
        .def("encode", &AbelianGroup::encode)
        .def("element_order", &AbelianGroup::element_order)
        .def("classify", [](const AbelianGroup& g) { return classify(g).str(); })
        .def("mu", [](const AbelianGroup& g) { return mu(g); })
        .def("spec", &AbelianGroup::spec_string)
        .def("__repr__",
             [](const AbelianGroup& g) { return "Group(" + g.spec_string() + ")"; });

    m.def("parse_group_spec",
          [](const std::string& s) { return parse_group_spec(s); });

    m.def(
        "is_sumfree",
        [](const AbelianGroup& g, const std::vector<element_t>& xs, bool distinct) {
            GroupSubset s = subset_of(g, xs);
            return distinct ? is_distinct_sumfree(s) : is_sumfree(s);
        },
        py::arg("group"), py::arg("elements"), py::arg("distinct") = false);

    m.def(
        "is_maximal_sumfree",
        [](const AbelianGroup& g, const std::vector<element_t>& xs, bool distinct) {
            GroupSubset s = subset_of(g, xs);
            return distinct ? is_maximal_distinct_sumfree(s) : is_maximal_sumfree(s);
        },
        py::arg("group"), py::arg("elements"), py::arg("distinct") = false);

    m.def("mu_star_bruteforce",
          [](const AbelianGroup& g) { return mu_star_bruteforce(g); });

    m.def("index2_subgroups", [](const AbelianGroup& g) {
        json out = json::array();
        for (const Subgroup& s : index2_subgroups(g)) out.push_back(subgroup_to_json(s));
        return json_to_py(out);
    });

    m.def(
        "census",
        [](const AbelianGroup& g, bool distinct, bool maximal, bool all,
           std::uint32_t workers) {
            CensusOptions opts{false, workers};
            CensusReport rep =
                all ? census_full(g, opts) : census(g, distinct, maximal, opts);
            return json_to_py(census_report_to_json(rep));
        },
        py::arg("group"), py::arg("distinct") = false, py::arg("maximal") = false,
        py::arg("all") = false, py::arg("workers") = 1);

    m.def(
        "build_link_graph",
        [](const AbelianGroup& g, const std::vector<element_t>& s,
           const std::vector<element_t>& b) {
            LinkGraph l = build_link_graph(g, subset_of(g, s), subset_of(g, b));
            json j = linkgraph_to_json(l);
            j["degree_profile"] = degree_profile_to_json(degree_profile(l));
            j["edge_counts"] = edge_counts_to_json(edge_counts(l));
            j["components"] = component_tally_to_json(component_census(l));
            return json_to_py(j);
        },
        py::arg("group"), py::arg("s"), py::arg("b"));

    m.def(
        "count_extensions",
        [](const AbelianGroup& g, const std::vector<element_t>& s,
           const std::vector<element_t>& a, bool distinct, bool direct_check) {
            ExtensionCounts ec =
                count_extensions(g, subset_of(g, s), subset_of(g, a), distinct, direct_check);
            py::dict d;
            d["mis_count"] = ec.mis_count;
            if (ec.maximal_extensions) d["maximal_extensions"] = *ec.maximal_extensions;
            return d;
        },
        py::arg("group"), py::arg("s"), py::arg("a"), py::arg("distinct") = true,
        py::arg("direct_check") = false);

    m.def(
        "construct",
        [](const AbelianGroup& g, const std::string& family, bool verify,
           std::uint64_t seed) {
            ConstructionFamily fam;
            if (family == "prop32") fam = construct_prop32(g);
            else if (family == "z5k") fam = construct_z5k(g);
            else if (family == "prop53") fam = construct_prop53(g);
            else throw std::invalid_argument("unknown family " + family);
            json j = family_to_json(fam);
            if (verify) j["check"] = family_check_to_json(verify_family(fam, seed));
            return json_to_py(j);
        },
        py::arg("group"), py::arg("family"), py::arg("verify") = true,
        py::arg("seed") = kDefaultSeed);

    m.def(
        "enumerate_mis",
        [](std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
           const std::vector<std::uint32_t>& forbidden) {
            MisResult r = enumerate_mis(graph_of(n, edges, forbidden));
            py::dict d;
            d["count"] = r.count;
            d["max_size"] = r.max_size;
            d["min_size"] = r.min_size;
            return d;
        },
        py::arg("n"), py::arg("edges"), py::arg("forbidden") = std::vector<std::uint32_t>{});

    m.def(
        "named_graph",
        [](const std::string& kind, std::uint32_t m) {
            SimpleGraph g;
            if (kind == "matching") g = matching_graph(m);
            else if (kind == "complete") g = complete_graph(m);
            else if (kind == "cycle") g = cycle_graph(m);
            else if (kind == "triangles") g = triangles_graph(m);
            else if (kind == "bridge_triangles") g = bridge_triangles_graph();
            else if (kind == "prism")
                g = cartesian_product(cycle_graph(3), complete_graph(2));
            else throw std::invalid_argument("unknown graph kind " + kind);
            return py::make_tuple(g.n, g.edge_list());
        },
        py::arg("kind"), py::arg("m") = 0);

    m.def(
        "has_perfect_matching",
        [](std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
            return has_perfect_matching(graph_of(n, edges, {}));
        },
        py::arg("n"), py::arg("edges"));

    m.def(
        "conjecture_scan",
        [](std::uint32_t n, const std::string& mode, std::uint64_t budget, std::uint64_t seed,
           std::uint32_t workers) {
            ScanMode m2 = mode == "random" ? ScanMode::random : ScanMode::exhaustive;
            return json_to_py(scan_report_to_json(conjecture53_scan(n, m2, budget, seed, workers)));
        },
        py::arg("n"), py::arg("mode") = "exhaustive", py::arg("budget") = 1000000,
        py::arg("seed") = kDefaultSeed, py::arg("workers") = 1);

    m.def(
        "gnp_experiment",
        [](const AbelianGroup& g, double p, std::uint32_t trials, std::uint64_t seed,
           std::uint32_t workers) {
            GnpOptions opts;
            opts.workers = workers;
            json out = json::array();
            for (const GnpSample& s : gnp_experiment(g, p, trials, seed, opts))
                out.push_back(gnp_sample_to_json(s));
            return json_to_py(out);
        },
        py::arg("group"), py::arg("p"), py::arg("trials"), py::arg("seed") = kDefaultSeed,
        py::arg("workers") = 1);

    m.def("verify_claims", [](const AbelianGroup& g) {
        return json_to_py(claims_report_to_json(verify_claims_512_515(g)));
    });

    m.attr("DEFAULT_SEED") = kDefaultSeed;
}
