#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sf/abelian.hpp"
#include "sf/subset.hpp"

namespace sf {

// Default seed used by every seeded operation unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// x + y = z.  The distinct version additionally requires x, y, z pairwise
// distinct.
bool is_schur_triple(const AbelianGroup& g, element_t x, element_t y, element_t z);
bool is_distinct_schur_triple(const AbelianGroup& g, element_t x, element_t y, element_t z);

bool is_sumfree(const GroupSubset& s);
bool is_distinct_sumfree(const GroupSubset& s);

// True iff s (already free) stays free after adding y.  y must not be in s.
bool extension_stays_free(const GroupSubset& s, element_t y, bool distinct);

// Throw std::invalid_argument when the input set fails the freeness test.
bool is_maximal_sumfree(const GroupSubset& s);
bool is_maximal_distinct_sumfree(const GroupSubset& s);

// Exact size of the largest (distinct) sum-free subset of `candidates`,
// branch-and-bound over the Schur-triple hypergraph, branching on the
// element in the most triples first.  Cap: |candidates| <= 40.
std::uint32_t max_free_subset_size(const AbelianGroup& g, const GroupSubset& candidates,
                                   bool distinct);

// Largest distinct sum-free subset of the whole group.  Cap: |G| <= 24.
std::uint32_t mu_star_bruteforce(const AbelianGroup& g);

// The standard maximum sum-free set in a type I(p) group: the union of
// cosets (3k+1)g + H for 0 <= k <= (p-2)/3, with H of index p and g not
// in H.  Satisfies |B| = mu(G), B = -B, sum-free.  For p = 2 the union
// degenerates to the single nontrivial coset g + H.
GroupSubset extremal_sumfree_type1(const AbelianGroup& g, const Subgroup& h, element_t gen);

// Searches all surjective homs psi: G -> Z_p for one with
// A inside psi^{-1}({k+1, ..., 2k+1}), p = 3k+2.  Guaranteed to exist when
// A is sum-free with |A| > (1/3 + 1/(3(p+1)))n; returns nullopt otherwise.
std::optional<ZpHom> gr_structure_check(const AbelianGroup& g, const GroupSubset& a);

// A family of pairwise-conflicting free sets: every emitted set passes the
// family's freeness predicate, and the union of any two distinct emitted
// sets does not.
struct ConstructionFamily {
    enum class Kind { prop32, z5k, prop53 };

    Kind kind;
    const AbelianGroup* group = nullptr;
    bool distinct_freeness = false;  // which predicate the sets satisfy

    // Replay parameters (unused ones stay empty / nullopt).
    GroupSubset subgroup_h;
    std::optional<element_t> gen;    // g
    std::optional<element_t> shift;  // s
    std::optional<element_t> coset_rep;

    std::vector<GroupSubset> sets;
    std::uint64_t expected_count = 0;

    std::string kind_str() const;
};

// 2^{mu/2} pairwise-conflicting distinct sum-free sets {0} u {one element
// per orbit {x,-x} of B}, for type I(p) groups with p >= 5.
ConstructionFamily construct_prop32(const AbelianGroup& g);

// 3^{(|B2|-1)/2} pairwise-conflicting sum-free sets in Z_5^k, built from the
// orbit choices {b,-b} / {b,-b-s} / {b+s,-b-s} over B2 = {2} + Z_5^{k-1}.
// The group must be Z_5^k; sets are fully cross-verified only for k <= 2.
ConstructionFamily construct_z5k(const AbelianGroup& z5k_group);

// 2^{n/4} (or 2^{(n-2)/4} when G = Z_2 + K) pairwise-conflicting distinct
// sum-free sets {0,s} u I over maximal independent sets I of the distinct
// link graph on the nontrivial index-2 coset.  Even order required.
ConstructionFamily construct_prop53(const AbelianGroup& g);

struct FamilyCheck {
    bool count_ok = false;
    bool freeness_ok = false;
    bool conflicts_ok = false;
    std::uint64_t pairs_checked = 0;
    bool sampled = false;  // pairwise check sampled rather than exhaustive
    bool ok() const { return count_ok && freeness_ok && conflicts_ok; }
};

// Checks |sets| = expected_count, per-set freeness, and pairwise conflicts.
// Pairwise verification is exhaustive up to 2^12 sets, beyond that a seeded
// sample of 10^4 pairs is used.
FamilyCheck verify_family(const ConstructionFamily& fam, std::uint64_t seed = kDefaultSeed);

}  // namespace sf
