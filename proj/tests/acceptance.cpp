// Acceptance suite: end-to-end checks of the toolkit's exact claims at desk
// scale.  Each criterion prints one pass/fail line; the binary exits nonzero
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "sf/census.hpp"
#include "sf/json_io.hpp"
#include "sf/linkgraph.hpp"
#include "sf/mis.hpp"
#include "sf/subset.hpp"
#include "sf/sumfree.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace sf;
using clock_t_ = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
    int id;
    std::string what;
    double time_budget;  // seconds; 0 = unlimited
    clock_t_::time_point t0 = clock_t_::now();
    bool pass = true;
    std::string note;

    Criterion(int id_, std::string what_, double budget = 0)
        : id(id_), what(std::move(what_)), time_budget(budget) {}

    void require(bool ok, const std::string& why = "")
    {
        if (!ok && pass) {
            pass = false;
            note = why;
        }
    }

    double elapsed() const
    {
        return std::chrono::duration<double>(clock_t_::now() - t0).count();
    }

    ~Criterion()
    {
        double secs = elapsed();
        if (time_budget > 0 && secs > time_budget)
            require(false, "over the time budget of " + std::to_string(time_budget) + "s");
        std::printf("[%s] %02d %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", id, what.c_str(),
                    secs, note.empty() ? "" : " -- ", note.c_str());
        if (!pass) ++g_failures;
    }
};

std::vector<std::vector<std::uint32_t>> even_groups_up_to(std::uint32_t maxn)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& l : catalog::abelian_factor_lists_up_to(maxn)) {
        std::uint64_t n = 1;
        for (std::uint32_t m : l) n *= m;
        if (n % 2 == 0) out.push_back(l);
    }
    return out;
}

void criterion_1()
{
    Criterion c(1, "mu formula equals exhaustive search on every group of order <= 20", 60);
    for (auto orders : catalog::abelian_factor_lists_up_to(20)) {
        AbelianGroup g(orders);
        std::uint32_t brute = max_free_subset_size(g, GroupSubset::full(g), false);
        c.require(mu(g) == brute, g.spec_string() + ": formula vs search mismatch");
    }
}

void criterion_2()
{
    Criterion c(2, "named maximal-independent-set counts", 1);
    c.require(enumerate_mis(complete_graph(4)).count == 4, "K4");
    c.require(enumerate_mis(complete_graph(2)).count == 2, "K2");
    c.require(enumerate_mis(cycle_graph(4)).count == 2, "C4");
    c.require(enumerate_mis(cartesian_product(cycle_graph(3), complete_graph(2))).count == 6,
              "C3xK2");
    for (std::uint32_t m = 1; m <= 10; ++m)
        c.require(enumerate_mis(matching_graph(m)).count == (std::uint64_t(1) << m),
                  "matching " + std::to_string(m));
    std::uint64_t p3 = 1;
    for (std::uint32_t t = 1; t <= 6; ++t) {
        p3 *= 3;
        c.require(enumerate_mis(triangles_graph(t)).count == p3,
                  "triangles " + std::to_string(t));
    }
    c.require(enumerate_mis(bridge_triangles_graph()).count == 8, "bridged triangles");
}

void criterion_3()
{
    Criterion c(3, "perfect-matching scan: exhaustive n <= 8, randomized n = 10, 12", 1800);
    for (std::uint32_t n : {2u, 4u, 6u}) {
        ScanReport r = conjecture53_scan(n, ScanMode::exhaustive, 1ull << 30, kDefaultSeed, 2);
        c.require(r.counterexamples.empty(), "counterexample at n = " + std::to_string(n));
        c.require(r.max_mis == (std::uint64_t(1) << (n / 2)),
                  "bound not attained at n = " + std::to_string(n));
        if (n == 6) {
            bool has_matching = false, has_bridge = false;
            SimpleGraph m3 = matching_graph(3), bt = bridge_triangles_graph();
            for (const auto& edges : r.attainers) {
                SimpleGraph g = oracle::from_edges(6, edges);
                if (oracle::isomorphic(g, m3)) has_matching = true;
                if (oracle::isomorphic(g, bt)) has_bridge = true;
            }
            c.require(has_matching && has_bridge,
                      "n = 6 attainers miss an extremal shape");
        }
    }
    ScanReport r8 = conjecture53_scan(8, ScanMode::exhaustive, 1ull << 30, kDefaultSeed, 2);
    c.require(r8.graphs_checked == (1ull << 24) && !r8.partial, "n = 8 scan incomplete");
    c.require(r8.counterexamples.empty(), "counterexample at n = 8");
    for (std::uint32_t n : {10u, 12u}) {
        ScanReport r = conjecture53_scan(n, ScanMode::random, 1000000, kDefaultSeed, 2);
        c.require(r.graphs_checked == 1000000, "random scan short of budget");
        c.require(r.counterexamples.empty(),
                  "counterexample at random n = " + std::to_string(n));
    }
}

void criterion_4()
{
    Criterion c(4, "index-2 subgroup counts split by rank on every even group of order <= 64", 10);
    for (auto orders : even_groups_up_to(64)) {
        AbelianGroup g(orders);
        std::uint32_t r = g.two_rank(), r1 = g.r1();
        std::uint32_t full = 0, less = 0, other = 0;
        for (const Subgroup& s : index2_subgroups(g)) {
            if (s.rank2 == r) ++full;
            else if (s.rank2 == r - 1) ++less;
            else ++other;
        }
        c.require(other == 0 && full == (1u << r1) - 1 && less == (1u << r) - (1u << r1),
                  g.spec_string() + ": rank split off");
    }
}

void criterion_5()
{
    Criterion c(5, "doubling-solution bound, order/index duality, full-rank criterion (order <= 64)");
    for (auto orders : catalog::abelian_factor_lists_up_to(64)) {
        AbelianGroup g(orders);
        std::uint32_t cap = 1u << g.two_rank();
        GroupSubset img(g);
        for (element_t x = 0; x < g.order(); ++x) img.set(g.dbl(x));
        std::set<std::uint32_t> counts;
        for (element_t t = 0; t < g.order(); ++t) {
            std::uint32_t k = solutions_2x(g, t).size();
            c.require(k <= cap, g.spec_string() + ": doubling bound");
            c.require((k > 0) == img.test(t), g.spec_string() + ": image mismatch");
            if (k) counts.insert(k);
        }
        c.require(counts.size() == 1, g.spec_string() + ": nonconstant fibre size");

        auto subs = all_subgroups(g);
        std::map<std::uint32_t, int> by_order, by_index;
        for (const Subgroup& s : subs) {
            ++by_order[s.members.size()];
            ++by_index[s.index];
        }
        c.require(by_order == by_index, g.spec_string() + ": order/index duality");

        bool two_group = g.odd_part_order() == 1;
        if (two_group) {
            GroupSubset o2 = order2_elements(g);
            for (const Subgroup& s : subs) {
                bool contains_all = o2.subset_of(s.members);
                c.require((s.rank2 == g.two_rank()) == contains_all,
                          g.spec_string() + ": full-rank criterion");
            }
        }
    }
}

void criterion_6()
{
    Criterion c(6, "link-graph degree and edge claims, exhaustive small + randomized larger");
    // exhaustive: every even group of order <= 24, every index-2 coset,
    // every source S inside the complement with |S| <= 3
    for (auto orders : even_groups_up_to(24)) {
        AbelianGroup g(orders);
        for (const Subgroup& h : index2_subgroups(g)) {
            GroupSubset a = h.members.complement();
            auto hs = h.members.elements();
            auto run = [&](const GroupSubset& s) {
                LinkGraph l = build_link_graph(g, s, a);
                DegreeProfile p = degree_profile(l);
                c.require(p.setting_ok && p.claims_ok,
                          g.spec_string() + ": degree claim");
                c.require(edge_counts(l).bound_ok, g.spec_string() + ": edge bound");
            };
            run(GroupSubset(g));
            for (std::size_t i = 0; i < hs.size(); ++i) {
                run(GroupSubset::of(g, {hs[i]}));
                for (std::size_t j = i + 1; j < hs.size(); ++j) {
                    run(GroupSubset::of(g, {hs[i], hs[j]}));
                    for (std::size_t k = j + 1; k < hs.size(); ++k)
                        run(GroupSubset::of(g, {hs[i], hs[j], hs[k]}));
                }
            }
        }
    }

    // randomized: 10^3 instances with |S| <= 6 on groups of order <= 32
    auto evens = even_groups_up_to(32);
    oracle::SplitMix64 rng{kDefaultSeed};
    for (int t = 0; t < 1000; ++t) {
        AbelianGroup g(evens[rng.below(evens.size())]);
        auto subs = index2_subgroups(g);
        const Subgroup& h = subs[rng.below(subs.size())];
        GroupSubset a = h.members.complement();
        auto hs = h.members.elements();
        GroupSubset s(g);
        std::uint32_t want = std::uint32_t(rng.below(7));
        while (s.size() < want && s.size() < hs.size()) s.set(hs[rng.below(hs.size())]);
        LinkGraph l = build_link_graph(g, s, a);
        DegreeProfile p = degree_profile(l);
        c.require(p.setting_ok && p.claims_ok, g.spec_string() + ": random degree claim");
        c.require(edge_counts(l).bound_ok, g.spec_string() + ": random edge bound");
    }

    // pinned small link graphs, exact typed edge sets
    {
        AbelianGroup z9({9});
        LinkGraph l = build_link_graph(z9, GroupSubset::of(z9, {3}),
                                       GroupSubset::of(z9, {1, 2, 4, 5, 7, 8}));
        std::vector<std::tuple<element_t, element_t, int>> want = {
            {1, 2, 2}, {1, 4, 1}, {1, 7, 1}, {2, 5, 1}, {2, 8, 1},
            {4, 7, 1}, {4, 8, 2}, {5, 7, 2}, {5, 8, 1},
        };
        c.require(l.typed_edges() == want && l.loops.empty(),
                  "order-3 source on Z9: wrong edges");
        c.require(component_census(l).prism == 1, "order-3 source on Z9: not a prism");
    }
    {
        AbelianGroup g({3, 3});
        element_t s = g.encode({1, 0}), sp = g.encode({0, 1});
        element_t v1 = g.add(s, sp), v2 = g.dbl(sp);
        element_t v3 = g.add(g.dbl(s), g.dbl(sp));
        LinkGraph l = build_link_graph(g, GroupSubset::of(g, {s, sp}),
                                       GroupSubset::of(g, {v1, v2, v3}));
        std::vector<std::tuple<element_t, element_t, int>> want = {{v1, v2, 2}, {v2, v3, 1}};
        c.require(l.typed_edges() == want, "two-source graph on Z3+Z3: wrong edges");
        c.require(l.loops.elements() == std::vector<element_t>{v1},
                  "two-source graph on Z3+Z3: wrong loops");
    }
}

void criterion_7()
{
    Criterion c(7, "link-graph extension counts equal direct enumeration (even order <= 16)");
    for (auto orders : even_groups_up_to(16)) {
        AbelianGroup g(orders);
        GroupSubset ord2 = order2_elements(g);
        for (const Subgroup& h : index2_subgroups(g)) {
            GroupSubset a = h.members.complement();
            std::vector<GroupSubset> sources{GroupSubset::of(g, {0})};
            ord2.for_each([&](element_t s) {
                if (!a.test(s)) sources.push_back(GroupSubset::of(g, {0, s}));
            });
            for (const GroupSubset& s : sources) {
                ExtensionCounts ec = count_extensions(g, s, a, true, true);
                auto direct = maximal_extensions_in(g, s, a, true);
                c.require(*ec.maximal_extensions == direct.size(),
                          g.spec_string() + ": route mismatch");
                c.require(*ec.maximal_extensions <= ec.mis_count,
                          g.spec_string() + ": more maximal sets than independent sets");
            }
        }
    }
}

void criterion_8()
{
    Criterion c(8, "construction families emit the advertised counts, certified by census");
    {
        AbelianGroup z5({5});
        ConstructionFamily f = construct_prop32(z5);
        c.require(f.sets.size() == 2 && verify_family(f).ok(), "Z5 family");
        c.require(*census(z5, true, true).f_star_max >= 2, "Z5 census certificate");
    }
    {
        AbelianGroup z11({11});
        ConstructionFamily f = construct_prop32(z11);
        c.require(f.sets.size() == 4 && verify_family(f).ok(), "Z11 family");
        c.require(*census(z11, true, true).f_star_max >= 4, "Z11 census certificate");
    }
    {
        AbelianGroup z55({5, 5});
        ConstructionFamily f = construct_prop32(z55);
        c.require(f.sets.size() == 32 && verify_family(f).ok(), "Z5+Z5 family");
        c.require(*census(z55, true, true, {.workers = 2}).f_star_max >= 32,
                  "Z5+Z5 census certificate");

        ConstructionFamily z = construct_z5k(z55);
        c.require(z.sets.size() == 9 && verify_family(z).ok(), "Z5^2 orbit family");
        c.require(*census(z55, false, true, {.workers = 2}).f_max >= 9,
                  "Z5^2 plain census certificate");
    }
    for (auto orders : even_groups_up_to(16)) {
        AbelianGroup g(orders);
        ConstructionFamily f = construct_prop53(g);
        bool z2k_shape = g.r1() == 0 && g.r2() == 1;
        std::uint64_t want = z2k_shape ? (std::uint64_t(1) << ((g.order() - 2) / 4))
                                       : (std::uint64_t(1) << (g.order() / 4));
        c.require(f.sets.size() == want, g.spec_string() + ": emitted count");
        c.require(verify_family(f).ok(), g.spec_string() + ": family verification");
        c.require(*census(g, true, true).f_star_max >= want,
                  g.spec_string() + ": census certificate");
    }
}

void criterion_9()
{
    Criterion c(9, "plain and distinct maximal counts agree on Z_2^k, k <= 3", 1);
    for (std::uint32_t k = 1; k <= 3; ++k) {
        AbelianGroup g(std::vector<std::uint32_t>(k, 2));
        CensusReport r = census_full(g);
        c.require(*r.f_max == *r.f_star_max, "k = " + std::to_string(k));
    }
}

void criterion_10()
{
    Criterion c(10, "pairwise overlap bounds for coset-generated families (even order <= 16)");
    for (auto orders : even_groups_up_to(16)) {
        AbelianGroup g(orders);
        ClaimsReport r = verify_claims_512_515(g);
        c.require(r.ok_00, g.spec_string() + ": zero/zero pairs share " +
                               std::to_string(r.max_common_00) + " > 1 sets");
        c.require(r.ok_0s, g.spec_string() + ": a mixed pair shares " +
                               std::to_string(r.max_common_0s) + " set(s)");
        c.require(r.ok_ss, g.spec_string() + ": shifted pairs share " +
                               std::to_string(r.max_common_ss) + " sets");
    }
}

void criterion_11()
{
    Criterion c(11, "enumeration agrees with the subset-filter oracle");
    oracle::SplitMix64 rng{kDefaultSeed};
    for (int t = 0; t < 1000; ++t) {
        std::uint32_t n = 1 + std::uint32_t(rng.below(12));
        SimpleGraph g = oracle::random_graph(rng, n, 0.1 + 0.8 * rng.next_double());
        c.require(enumerate_mis(g).count == oracle::naive_mis_count(g), "random graph");
    }
    for (const SimpleGraph& g :
         {matching_graph(3), complete_graph(4), cycle_graph(4), cycle_graph(5),
          triangles_graph(3), bridge_triangles_graph(),
          cartesian_product(cycle_graph(3), complete_graph(2))})
        c.require(enumerate_mis(g).count == oracle::naive_mis_count(g), "named graph");
}

void criterion_12()
{
    Criterion c(12, "random-subset experiment reproduces byte-identical reports");
    AbelianGroup g({10});
    std::string a = gnp_to_jsonl(gnp_experiment(g, 0.5, 100, 42, {.workers = 1}));
    std::string b = gnp_to_jsonl(gnp_experiment(g, 0.5, 100, 42, {.workers = 1}));
    std::string d = gnp_to_jsonl(gnp_experiment(g, 0.5, 100, 42, {.workers = 3}));
    c.require(a == b, "repeat run differs");
    c.require(a == d, "worker count changes the report");
    for (const GnpSample& s : gnp_experiment(g, 1.0, 5, 42))
        c.require(s.ratio == 1.0 && s.largest_sumfree == mu(g), "p = 1 ratio");
}

}  // namespace

int main()
{
    auto t0 = clock_t_::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    double secs = std::chrono::duration<double>(clock_t_::now() - t0).count();
    std::printf("%s: %d criterion(s) failed (%.1fs total)\n",
                g_failures ? "FAILURE" : "SUCCESS", g_failures, secs);
    return g_failures ? 1 : 0;
}
