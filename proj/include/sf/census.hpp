#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sf/abelian.hpp"
#include "sf/subset.hpp"
#include "sf/sumfree.hpp"

namespace sf {

// Exact counts from exhaustive enumeration.  f / f_star count all (distinct)
// sum-free subsets, f_max / f_star_max the maximal ones.
struct CensusReport {
    std::string group_spec;
    std::optional<std::uint64_t> f, f_star, f_max, f_star_max;
    std::optional<std::vector<GroupSubset>> witnesses;  // maximal sets, when collected
    double seconds = 0;
};

struct CensusOptions {
    bool collect_witnesses = false;  // collect the maximal sets
    std::uint32_t workers = 1;
};

// DFS over elements in index order, pruning any branch that already holds a
// triple; maximality is the no-element-outside-extends test at the leaves.
// Caps: |G| <= 26 in full mode, <= 32 when maximal_only.
CensusReport census(const AbelianGroup& g, bool distinct, bool maximal_only,
                    CensusOptions opts = {});

// All four counts (two DFS passes).
CensusReport census_full(const AbelianGroup& g, CensusOptions opts = {});

struct ExtensionCounts {
    std::uint64_t mis_count = 0;
    // Number of maximal independent sets I for which S u I is a maximal
    // (distinct) sum-free subset of G; filled by the direct check.
    std::optional<std::uint64_t> maximal_extensions;
};

// Maximal independent sets of L*_S[A] (looped vertices dropped first); the
// MIS count upper-bounds the number of maximal distinct sum-free sets of the
// form S u I.  With direct_check the exact number is also computed; the
// `distinct` flag picks which maximality predicate that check uses.
ExtensionCounts count_extensions(const AbelianGroup& g, const GroupSubset& s,
                                 const GroupSubset& a, bool distinct = true,
                                 bool direct_check = false);

// Every maximal (distinct) sum-free D with S <= D <= S u A, found by direct
// DFS over the elements of A; maximality is relative to the whole group.
// This is the enumeration-side ground truth for the link-graph route.
std::vector<GroupSubset> maximal_extensions_in(const AbelianGroup& g, const GroupSubset& s,
                                               const GroupSubset& a, bool distinct);

// The maximal distinct sum-free sets generated by the pair (A, S): sets
// S u I with I a maximal independent set of L*_S[A] that are maximal in G.
// Returned as sorted single-word element masks (requires |G| <= 64).
std::vector<std::uint64_t> generated_maximal_sets(const AbelianGroup& g, const GroupSubset& a,
                                                  const GroupSubset& s);

// Cross-checks, for every pair of index-2 cosets, how many maximal distinct
// sum-free sets the pairs (A,{0}) / (A',{0}) / (A,{0,s}) generate in common:
// at most one for two zero-sourced pairs, none for mixed pairs, at most
// 3^{n/12} for two shifted pairs.  Even order, |G| <= 24.
struct ClaimsReport {
    std::string group_spec;
    std::uint64_t pairs_00 = 0, pairs_0s = 0, pairs_ss = 0;
    std::uint64_t max_common_00 = 0, max_common_0s = 0, max_common_ss = 0;
    double bound_ss = 0;  // 3^{n/12}
    bool ok_00 = true, ok_0s = true, ok_ss = true;
    bool ok() const { return ok_00 && ok_0s && ok_ss; }
};

ClaimsReport verify_claims_512_515(const AbelianGroup& g);

// One random-subset trial: keep each element with probability p, then solve
// for the largest sum-free subset of the sample exactly.
struct GnpSample {
    double p = 0;
    std::uint64_t trial = 0;
    std::uint64_t derived_seed = 0;
    std::vector<element_t> sample;
    std::uint32_t largest_sumfree = 0;
    double ratio = 0;  // largest / (mu(G) * p); defined as 0 when p = 0
};

struct GnpOptions {
    std::uint32_t workers = 1;
    bool resample_oversize = false;  // redraw when a sample exceeds the solver cap
    std::uint32_t max_sample = 40;
};

// Deterministic for fixed (group, p, trials, seed) and independent of the
// worker count: each trial derives its own generator from (seed, trial).
std::vector<GnpSample> gnp_experiment(const AbelianGroup& g, double p, std::uint32_t trials,
                                      std::uint64_t seed, GnpOptions opts = {});

}  // namespace sf
