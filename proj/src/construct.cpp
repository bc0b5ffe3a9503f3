#include <bit>
#include <stdexcept>

#include "sf/linkgraph.hpp"
#include "sf/mis.hpp"
#include "sf/subset.hpp"
#include "sf/sumfree.hpp"

namespace sf {

ConstructionFamily construct_prop53(const AbelianGroup& g)
{
    if (g.order() % 2 != 0)
        throw std::invalid_argument("construct_prop53: group order must be even");

    // Deterministic choice: the index-2 subgroup whose defining hom to Z_2
    // is lexicographically smallest (index2_subgroups already returns them
    // in that order), then the smallest order-2 shift inside it.
    auto subs = index2_subgroups(g);
    const Subgroup& h = subs.front();
    GroupSubset a = h.members.complement();

    ConstructionFamily fam;
    fam.kind = ConstructionFamily::Kind::prop53;
    fam.group = &g;
    fam.distinct_freeness = true;
    fam.subgroup_h = h.members;
    element_t a_rep = 0;
    while (!a.test(a_rep)) ++a_rep;
    fam.coset_rep = a_rep;

    GroupSubset source(g);
    source.set(0);
    const bool have_shift = g.r1() >= 1 || g.r2() >= 2;  // |H| even
    if (have_shift) {
        element_t s = 0;
        bool found = false;
        for (element_t x = 1; x < g.order() && !found; ++x)
            if (h.members.test(x) && g.dbl(x) == 0) {
                s = x;
                found = true;
            }
        if (!found)
            throw std::logic_error("construct_prop53: no order-2 shift in an even subgroup");
        source.set(s);
        fam.shift = s;
        fam.expected_count = std::uint64_t(1) << (g.order() / 4);
    } else {
        // G = Z_2 + K: the zero-sourced link graph on the nontrivial coset
        fam.expected_count = std::uint64_t(1) << ((g.order() - 2) / 4);
    }

    LinkGraph l = build_link_graph(g, source, a);
    SimpleGraph gr = l.to_simple();
    for_each_mis(gr, [&](std::uint64_t vmask) {
        GroupSubset out = source;
        std::uint64_t scan = vmask;
        while (scan) {
            std::uint32_t v = std::uint32_t(std::countr_zero(scan));
            scan &= scan - 1;
            out.set(l.vertices[v]);
        }
        fam.sets.push_back(std::move(out));
    });

    if (fam.sets.size() != fam.expected_count)
        throw std::logic_error("construct_prop53: emitted count does not match 2^{n/4}");
    return fam;
}

}  // namespace sf
