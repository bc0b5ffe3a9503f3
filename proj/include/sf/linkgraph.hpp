#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sf/abelian.hpp"
#include "sf/mis.hpp"
#include "sf/subset.hpp"

namespace sf {

// The distinct link graph L*_S[B]: vertex set B; x,y adjacent when some
// s in S completes {x,y,s} to a distinct Schur triple; a loop sits at x when
// two distinct s,s' in S complete {x,s,s'} to one.  An edge is type 1 when
// x - y lies in (S u -S) \ {0}, otherwise type 2 (then x + y lies in S).
struct LinkGraph {
    const AbelianGroup* group = nullptr;
    GroupSubset source;                // S
    std::vector<element_t> vertices;   // elements of B, ascending
    std::vector<std::vector<std::uint64_t>> adj1;  // type-1 rows over vertex ids
    std::vector<std::vector<std::uint64_t>> adj2;  // type-2 rows
    GroupSubset loops;                 // subset of B

    std::uint32_t vertex_count() const { return std::uint32_t(vertices.size()); }
    bool adjacent(std::uint32_t u, std::uint32_t v) const;
    int edge_type(std::uint32_t u, std::uint32_t v) const;  // 0 when not an edge
    std::uint32_t degree1(std::uint32_t v) const;
    std::uint32_t degree2(std::uint32_t v) const;
    std::uint64_t edges1() const;
    std::uint64_t edges2() const;

    // Typed edge list as element pairs (u < v by element index).
    std::vector<std::tuple<element_t, element_t, int>> typed_edges() const;

    // Projection for the MIS engine; looped vertices become forbidden.
    // Requires at most 64 vertices.
    SimpleGraph to_simple() const;
};

LinkGraph build_link_graph(const AbelianGroup& g, const GroupSubset& s, const GroupSubset& b);

// Degree report with the structural checks that apply when B is the
// nontrivial coset of an index-2 subgroup and S avoids it: every vertex has
// d1 = |(S u -S) \ {0}|, d2 <= |S|, no loops, and Delta <= 2*delta + 1
// (Delta <= 2*delta unless 0 in S and S = -S).  Outside that setting the
// degrees are still reported and the checks are skipped with a warning.
struct DegreeProfile {
    std::vector<std::uint32_t> d1, d2;  // per vertex, in vertex order
    std::uint32_t delta = 0;            // min total degree
    std::uint32_t Delta = 0;            // max total degree
    bool setting_ok = false;
    bool claims_ok = false;             // meaningful only when setting_ok
    std::string warning;
};

DegreeProfile degree_profile(const LinkGraph& l);

// Edge counts with the lower bound
//   e >= ((|(S u -S)\{0}| + |S|) / 2) |B|  -  |S| (|S u -S| + 1) 2^r.
struct EdgeCounts {
    std::uint64_t e1 = 0, e2 = 0, total = 0;
    double lower_bound = 0;
    bool setting_ok = false;
    bool bound_ok = false;
};

EdgeCounts edge_counts(const LinkGraph& l);

// Connected components classified against the small catalog; isomorphism is
// decided by (size, degree sequence, triangle count), which separates the
// catalog members.  Loops are ignored here (they live in LinkGraph::loops).
struct ComponentTally {
    std::uint32_t k1 = 0, k2 = 0, k3 = 0, k4 = 0, c4 = 0, prism = 0;  // prism = C3 x K2
    std::map<std::uint32_t, std::uint32_t> other;  // size -> count

    std::uint32_t total() const;
    bool operator==(const ComponentTally&) const = default;
};

ComponentTally component_census(const SimpleGraph& g);
ComponentTally component_census(const LinkGraph& l);

}  // namespace sf
