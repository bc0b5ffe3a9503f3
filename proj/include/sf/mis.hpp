#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sf {

// Loopless undirected graph on at most 64 vertices, adjacency rows as
// bitmasks.  Vertices flagged forbidden (looped vertices from a link graph)
// are deleted before any enumeration.
struct SimpleGraph {
    std::uint32_t n = 0;
    std::vector<std::uint64_t> adj;
    std::uint64_t forbidden = 0;

    SimpleGraph() = default;
    explicit SimpleGraph(std::uint32_t vertices);

    void add_edge(std::uint32_t u, std::uint32_t v);
    bool has_edge(std::uint32_t u, std::uint32_t v) const
    {
        return (adj[u] >> v) & 1u;
    }
    std::uint32_t degree(std::uint32_t v) const;
    std::uint32_t min_degree() const;
    std::uint32_t max_degree() const;
    std::uint64_t edge_count() const;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_list() const;  // sorted
};

SimpleGraph matching_graph(std::uint32_t m);   // m edges on 2m vertices
SimpleGraph complete_graph(std::uint32_t m);
SimpleGraph cycle_graph(std::uint32_t m);      // m >= 3
SimpleGraph cartesian_product(const SimpleGraph& a, const SimpleGraph& b);
SimpleGraph triangles_graph(std::uint32_t t);  // t disjoint triangles
SimpleGraph bridge_triangles_graph();          // two triangles joined by one edge
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

bool is_triangle_free(const SimpleGraph& g);

struct MisResult {
    std::uint64_t count = 0;
    std::uint32_t max_size = 0;
    std::uint32_t min_size = 0;
    std::vector<std::uint64_t> witnesses;  // filled only when requested
};

// Exact number of maximal independent sets, Bron-Kerbosch with pivoting on
// the complement graph; deterministic branching order.  Forbidden vertices
// are removed first; witness masks refer to the original vertex numbering.
MisResult enumerate_mis(const SimpleGraph& g, bool collect_witnesses = false);

void for_each_mis(const SimpleGraph& g, const std::function<void(std::uint64_t)>& fn);

// Numeric upper bounds on mis(g).  All bound values are computed in long
// double and nudged upward at the final rounding step so that
// "mis <= bound" assertions stay conservative.
double bound_moon_moser(const SimpleGraph& g);                 // 3^{n/3}
std::optional<double> bound_hujter_tuza(const SimpleGraph& g); // 2^{n/2}, triangle-free only
// For Delta <= k*delta:  sum_{i <= n/b} C(n,i) * 3^{(k/(k+1)) n/3 + 2n/(3b)},
// b = sqrt(delta).
double bound_blst(const SimpleGraph& g, std::uint32_t k);
// For g \ T triangle-free with e(g\T) = n/2 + k:  2^{n/2 - k/(100 D^2) + 2|T|}.
double bound_triangle_sparse(const SimpleGraph& g, std::uint64_t t_mask);
// For an n-vertex graph with n + k edges:  3^{Delta/13} * 3^{n/3 - k/(13 Delta)}.
double bound_stability(const SimpleGraph& g);

// Backtracking matcher with failure memoisation; cap n <= 24.
bool has_perfect_matching(const SimpleGraph& g);

// Bit-exact graph text format: "n m" then one "u v" line per edge with
// u < v, lines sorted lexicographically.
std::string format_graph_text(const SimpleGraph& g);
SimpleGraph parse_graph_text(const std::string& text);

enum class ScanMode { exhaustive, random };

struct ScanReport {
    std::uint32_t n = 0;
    std::string mode;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t graphs_checked = 0;
    std::uint64_t max_mis = 0;
    std::uint64_t bound = 0;  // 2^{n/2}
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> attainers;
    std::uint64_t attainers_total = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> counterexamples;
    bool partial = false;

    bool found_counterexample() const { return !counterexamples.empty(); }
};

// Searches graphs with a perfect matching for violations of
// mis(G) <= 2^{n/2}.  Exhaustive mode fixes the matching {01, 23, ...} and
// ranges over every supergraph (n <= 8); random mode draws seeded samples
// (n <= 20).  Deterministic for fixed (n, mode, budget, seed), independent
// of the worker count.
ScanReport conjecture53_scan(std::uint32_t n, ScanMode mode, std::uint64_t budget,
                             std::uint64_t seed, std::uint32_t workers = 1);

// Same verdict for one user-supplied graph.
ScanReport conjecture53_check_graph(const SimpleGraph& g);

}  // namespace sf
