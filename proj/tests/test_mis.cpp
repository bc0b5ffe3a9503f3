#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>

#include "sf/linkgraph.hpp"
#include "sf/mis.hpp"
#include "support/oracles.hpp"

using namespace sf;

TEST_CASE("mis counts on the named graphs")
{
    CHECK(enumerate_mis(matching_graph(3)).count == 8);
    CHECK(enumerate_mis(complete_graph(4)).count == 4);
    CHECK(enumerate_mis(complete_graph(2)).count == 2);
    CHECK(enumerate_mis(cycle_graph(4)).count == 2);
    CHECK(enumerate_mis(cartesian_product(cycle_graph(3), complete_graph(2))).count == 6);
    CHECK(enumerate_mis(triangles_graph(3)).count == 27);
    CHECK(enumerate_mis(bridge_triangles_graph()).count == 8);
    CHECK(enumerate_mis(cycle_graph(5)).count == 5);
    CHECK(enumerate_mis(cycle_graph(6)).count == 5);
    CHECK(enumerate_mis(SimpleGraph(0)).count == 1);  // the empty set is maximal
    CHECK(enumerate_mis(SimpleGraph(1)).count == 1);
}

TEST_CASE("named graph shapes and parameter validation")
{
    SimpleGraph prism = cartesian_product(cycle_graph(3), complete_graph(2));
    CHECK(prism.n == 6);
    CHECK(prism.edge_count() == 9);
    CHECK(matching_graph(3).n == 6);
    CHECK(matching_graph(3).edge_count() == 3);
    SimpleGraph bt = bridge_triangles_graph();
    CHECK(bt.n == 6);
    CHECK(bt.edge_count() == 7);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(matching_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(triangles_graph(22), std::invalid_argument);
}

TEST_CASE("forbidden vertices are removed before enumeration")
{
    SimpleGraph g = matching_graph(2);
    g.forbidden = 1;  // drop vertex 0; leaves vertex 1 isolated plus edge {2,3}
    MisResult r = enumerate_mis(g, true);
    CHECK(r.count == 2);
    CHECK(r.witnesses == std::vector<std::uint64_t>{0b0110, 0b1010});
}

TEST_CASE("enumeration agrees with the subset-filter oracle")
{
    oracle::SplitMix64 rng{2024};
    for (int t = 0; t < 400; ++t) {
        std::uint32_t n = 1 + std::uint32_t(rng.below(12));
        SimpleGraph g = oracle::random_graph(rng, n, 0.15 + 0.7 * rng.next_double());
        MisResult r = enumerate_mis(g);
        CHECK(r.count == oracle::naive_mis_count(g));
    }
    // also with forbidden vertices in play
    for (int t = 0; t < 100; ++t) {
        std::uint32_t n = 2 + std::uint32_t(rng.below(10));
        SimpleGraph g = oracle::random_graph(rng, n, 0.4);
        g.forbidden = rng.next() & ((1ull << n) - 1);
        if (g.forbidden == ((1ull << n) - 1)) g.forbidden = 0;
        CHECK(enumerate_mis(g).count == oracle::naive_mis_count(g));
    }
}

TEST_CASE("mis is multiplicative over disjoint unions")
{
    oracle::SplitMix64 rng{99};
    for (int t = 0; t < 60; ++t) {
        SimpleGraph a = oracle::random_graph(rng, 2 + std::uint32_t(rng.below(7)), 0.4);
        SimpleGraph b = oracle::random_graph(rng, 2 + std::uint32_t(rng.below(7)), 0.4);
        CHECK(enumerate_mis(disjoint_union(a, b)).count ==
              enumerate_mis(a).count * enumerate_mis(b).count);
    }
}

TEST_CASE("classical bounds")
{
    SimpleGraph nine(9);
    CHECK(bound_moon_moser(nine) == doctest::Approx(27.0).epsilon(1e-9));

    auto ht = bound_hujter_tuza(cycle_graph(5));
    REQUIRE(ht.has_value());
    CHECK(*ht == doctest::Approx(std::pow(2.0, 2.5)).epsilon(1e-9));
    CHECK(enumerate_mis(cycle_graph(5)).count <= *ht);
    CHECK_FALSE(bound_hujter_tuza(triangles_graph(1)).has_value());

    // Moon-Moser equality holds exactly on disjoint unions of triangles
    CHECK(double(enumerate_mis(triangles_graph(4)).count) ==
          doctest::Approx(std::pow(3.0, 4.0)));
    // and a perfect matching meets the triangle-free bound exactly
    CHECK(double(enumerate_mis(matching_graph(5)).count) ==
          doctest::Approx(std::pow(2.0, 5.0)));
}

TEST_CASE("near-regular bound")
{
    SimpleGraph m4 = matching_graph(4);
    double b = bound_blst(m4, 1);
    CHECK(b >= double(enumerate_mis(m4).count));  // mis = 16

    SimpleGraph k4 = complete_graph(4);
    CHECK(bound_blst(k4, 1) >= 4.0);

    oracle::SplitMix64 rng{5};
    for (int t = 0; t < 30; ++t) {
        SimpleGraph g = oracle::random_regular(rng, 12, 3);
        CHECK(bound_blst(g, 1) >= double(enumerate_mis(g).count));
    }

    SimpleGraph iso(3);  // isolated vertices: delta = 0
    CHECK_THROWS_AS(bound_blst(iso, 1), std::invalid_argument);
    SimpleGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS_AS(bound_blst(path, 1), std::invalid_argument);  // Delta > delta
    CHECK(bound_blst(path, 2) >= double(enumerate_mis(path).count));
}

TEST_CASE("almost-triangle-free bound")
{
    SimpleGraph c6 = cycle_graph(6);
    double b = bound_triangle_sparse(c6, 0);
    CHECK(b == doctest::Approx(std::pow(2.0, 3.0 - 3.0 / 400.0)).epsilon(1e-6));
    CHECK(double(enumerate_mis(c6).count) <= b);  // mis = 5

    SimpleGraph k3 = triangles_graph(1);
    CHECK_THROWS_AS(bound_triangle_sparse(k3, 0), std::invalid_argument);
    double bk3 = bound_triangle_sparse(k3, 1);  // drop vertex 0: K2 remains
    CHECK(bk3 >= double(enumerate_mis(k3).count));

    // with T empty and at most n/2 edges the bound is no better than 2^{n/2}
    oracle::SplitMix64 rng{17};
    for (int t = 0; t < 50; ++t) {
        SimpleGraph g = oracle::random_graph(rng, 4 + std::uint32_t(rng.below(9)), 0.2);
        if (!is_triangle_free(g)) continue;
        double bound = bound_triangle_sparse(g, 0);
        CHECK(double(enumerate_mis(g).count) <= bound);
        if (g.edge_count() <= g.n / 2)
            CHECK(bound >= std::pow(2.0, double(g.n) / 2) * (1 - 1e-9));
    }
}

TEST_CASE("edge-surplus stability bound")
{
    SimpleGraph m3 = matching_graph(3);
    double b1 = bound_stability(m3);
    CHECK(b1 == doctest::Approx(std::pow(3.0, 1.0 / 13.0) * std::pow(3.0, 2.0 + 3.0 / 13.0))
                    .epsilon(1e-6));
    CHECK(b1 >= 8.0);

    SimpleGraph t2 = triangles_graph(2);
    CHECK(bound_stability(t2) >= 9.0);

    SimpleGraph k4 = complete_graph(4);
    CHECK(bound_stability(k4) >= 4.0);

    SimpleGraph edgeless(4);
    CHECK_THROWS_AS(bound_stability(edgeless), std::invalid_argument);
}

TEST_CASE("bounds hold over a randomized instance suite")
{
    oracle::SplitMix64 rng{31337};
    int instances = 0;
    while (instances < 1000) {
        std::uint32_t n = 4 + std::uint32_t(rng.below(11));
        SimpleGraph g = oracle::random_graph(rng, n, 0.1 + 0.6 * rng.next_double());
        ++instances;
        std::uint64_t misc = enumerate_mis(g).count;
        CHECK(double(misc) <= bound_moon_moser(g));
        if (auto ht = bound_hujter_tuza(g)) CHECK(double(misc) <= *ht);
        std::uint32_t dmin = g.min_degree(), dmax = g.max_degree();
        if (dmin >= 1) {
            std::uint32_t k = (dmax + dmin - 1) / dmin;
            CHECK(double(misc) <= bound_blst(g, k));
        }
        if (dmax >= 1) CHECK(double(misc) <= bound_stability(g));
        if (is_triangle_free(g)) CHECK(double(misc) <= bound_triangle_sparse(g, 0));

        // 3^{n/3} is met exactly only by disjoint unions of triangles
        if (n % 3 == 0) {
            std::uint64_t pow3 = 1;
            for (std::uint32_t i = 0; i < n / 3; ++i) pow3 *= 3;
            if (misc == pow3)
                CHECK(component_census(g).k3 == n / 3);
        }
    }
}

TEST_CASE("perfect matching detection")
{
    CHECK(has_perfect_matching(cycle_graph(4)));
    CHECK_FALSE(has_perfect_matching(triangles_graph(1)));
    SimpleGraph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK(has_perfect_matching(p4));
    CHECK(has_perfect_matching(matching_graph(10)));
    CHECK_FALSE(has_perfect_matching(triangles_graph(2)));  // two odd components
    SimpleGraph empty2(2);
    CHECK_FALSE(has_perfect_matching(empty2));

    // star K_{1,3}: even order, no perfect matching
    SimpleGraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK_FALSE(has_perfect_matching(star));

    CHECK_THROWS_AS(has_perfect_matching(matching_graph(13)), std::invalid_argument);

    // against a subset-filter matcher on random instances
    oracle::SplitMix64 rng{808};
    for (int t = 0; t < 200; ++t) {
        std::uint32_t n = 2 * (1 + std::uint32_t(rng.below(5)));
        SimpleGraph g = oracle::random_graph(rng, n, 0.3 + 0.4 * rng.next_double());
        // brute force: any partition of the vertices into adjacent pairs
        auto brute = [&]() {
            std::uint64_t all = (1ull << n) - 1;
            auto rec = [&](auto&& self, std::uint64_t left) -> bool {
                if (!left) return true;
                std::uint32_t v = std::uint32_t(std::countr_zero(left));
                std::uint64_t nb = g.adj[v] & left;
                while (nb) {
                    std::uint32_t u = std::uint32_t(std::countr_zero(nb));
                    nb &= nb - 1;
                    if (self(self, left & ~(1ull << v) & ~(1ull << u))) return true;
                }
                return false;
            };
            return rec(rec, all);
        };
        CHECK(has_perfect_matching(g) == brute());
    }
}

TEST_CASE("graph text format is bit-exact and validated")
{
    std::string text = format_graph_text(bridge_triangles_graph());
    CHECK(text == "6 7\n0 1\n0 2\n0 3\n1 2\n3 4\n3 5\n4 5\n");
    SimpleGraph rt = parse_graph_text(text);
    CHECK(format_graph_text(rt) == text);

    CHECK_THROWS_AS(parse_graph_text("2 1\n1 0\n"), std::invalid_argument);   // u < v required
    CHECK_THROWS_AS(parse_graph_text("2 2\n0 1\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_text("3 2\n0 2\n0 1\n"), std::invalid_argument);  // unsorted
    CHECK_THROWS_AS(parse_graph_text("2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_text("x"), std::invalid_argument);
}

TEST_CASE("exhaustive scan over supergraphs of a fixed matching, n = 4")
{
    ScanReport r = conjecture53_scan(4, ScanMode::exhaustive, 1u << 20, 1, 1);
    CHECK(r.graphs_checked == 16);  // 2^{C(4,2) - 2}
    CHECK(r.max_mis == 4);
    CHECK(r.bound == 4);
    CHECK(r.counterexamples.empty());
    CHECK_FALSE(r.partial);

    bool has_matching2 = false, has_k4 = false;
    SimpleGraph m2 = matching_graph(2), k4 = complete_graph(4);
    for (const auto& edges : r.attainers) {
        SimpleGraph g = oracle::from_edges(4, edges);
        if (oracle::isomorphic(g, m2)) has_matching2 = true;
        if (oracle::isomorphic(g, k4)) has_k4 = true;
    }
    CHECK(has_matching2);
    CHECK(has_k4);
}

TEST_CASE("exhaustive scan at n = 6 finds both extremal shapes")
{
    ScanReport r = conjecture53_scan(6, ScanMode::exhaustive, 1u << 20, 1, 2);
    CHECK(r.graphs_checked == 4096);
    CHECK(r.max_mis == 8);
    CHECK(r.counterexamples.empty());

    bool has_matching3 = false, has_bridge = false;
    SimpleGraph m3 = matching_graph(3), bt = bridge_triangles_graph();
    for (const auto& edges : r.attainers) {
        SimpleGraph g = oracle::from_edges(6, edges);
        if (oracle::isomorphic(g, m3)) has_matching3 = true;
        if (oracle::isomorphic(g, bt)) has_bridge = true;
    }
    CHECK(has_matching3);
    CHECK(has_bridge);
}

TEST_CASE("scan budgets, determinism, and the single-graph mode")
{
    ScanReport partial = conjecture53_scan(6, ScanMode::exhaustive, 100, 1, 1);
    CHECK(partial.partial);
    CHECK(partial.graphs_checked == 100);

    ScanReport r1 = conjecture53_scan(8, ScanMode::random, 2000, 42, 1);
    ScanReport r2 = conjecture53_scan(8, ScanMode::random, 2000, 42, 2);
    CHECK(r1.max_mis == r2.max_mis);
    CHECK(r1.graphs_checked == r2.graphs_checked);
    CHECK(r1.attainers_total == r2.attainers_total);
    CHECK(r1.counterexamples.empty());

    ScanReport one = conjecture53_check_graph(bridge_triangles_graph());
    CHECK(one.max_mis == 8);
    CHECK(one.counterexamples.empty());
    CHECK(one.attainers_total == 1);

    SimpleGraph k3 = triangles_graph(1);
    CHECK_THROWS_AS(conjecture53_check_graph(k3), std::invalid_argument);
    CHECK_THROWS_AS(conjecture53_scan(3, ScanMode::exhaustive, 10, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(conjecture53_scan(10, ScanMode::exhaustive, 10, 1, 1),
                    std::invalid_argument);
}
