#include "sf/linkgraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sf {

namespace {

inline bool row_test(const std::vector<std::uint64_t>& row, std::uint32_t v)
{
    return (row[v >> 6] >> (v & 63)) & 1u;
}

inline void row_set(std::vector<std::uint64_t>& row, std::uint32_t v)
{
    row[v >> 6] |= std::uint64_t(1) << (v & 63);
}

std::uint32_t row_popcount(const std::vector<std::uint64_t>& row)
{
    std::uint32_t c = 0;
    for (std::uint64_t w : row) c += std::uint32_t(std::popcount(w));
    return c;
}

}  // namespace

bool LinkGraph::adjacent(std::uint32_t u, std::uint32_t v) const
{
    return row_test(adj1[u], v) || row_test(adj2[u], v);
}

int LinkGraph::edge_type(std::uint32_t u, std::uint32_t v) const
{
    if (row_test(adj1[u], v)) return 1;
    if (row_test(adj2[u], v)) return 2;
    return 0;
}

std::uint32_t LinkGraph::degree1(std::uint32_t v) const { return row_popcount(adj1[v]); }
std::uint32_t LinkGraph::degree2(std::uint32_t v) const { return row_popcount(adj2[v]); }

std::uint64_t LinkGraph::edges1() const
{
    std::uint64_t s = 0;
    for (std::uint32_t v = 0; v < vertex_count(); ++v) s += degree1(v);
    return s / 2;
}

std::uint64_t LinkGraph::edges2() const
{
    std::uint64_t s = 0;
    for (std::uint32_t v = 0; v < vertex_count(); ++v) s += degree2(v);
    return s / 2;
}

std::vector<std::tuple<element_t, element_t, int>> LinkGraph::typed_edges() const
{
    std::vector<std::tuple<element_t, element_t, int>> out;
    for (std::uint32_t u = 0; u < vertex_count(); ++u)
        for (std::uint32_t v = u + 1; v < vertex_count(); ++v) {
            int t = edge_type(u, v);
            if (t) out.emplace_back(vertices[u], vertices[v], t);
        }
    return out;
}

SimpleGraph LinkGraph::to_simple() const
{
    if (vertex_count() > 64)
        throw std::invalid_argument("link graph: more than 64 vertices for the MIS engine");
    SimpleGraph g(vertex_count());
    for (std::uint32_t u = 0; u < vertex_count(); ++u)
        for (std::uint32_t v = u + 1; v < vertex_count(); ++v)
            if (adjacent(u, v)) g.add_edge(u, v);
    for (std::uint32_t u = 0; u < vertex_count(); ++u)
        if (loops.test(vertices[u])) g.forbidden |= std::uint64_t(1) << u;
    return g;
}

LinkGraph build_link_graph(const AbelianGroup& g, const GroupSubset& s, const GroupSubset& b)
{
    if (&s.group() != &g || &b.group() != &g)
        throw std::invalid_argument("build_link_graph: sets must belong to the given group");

    LinkGraph l;
    l.group = &g;
    l.source = s;
    l.vertices = b.elements();
    l.loops = GroupSubset(g);

    const std::uint32_t nv = l.vertex_count();
    const std::size_t words = (nv + 63) / 64;
    l.adj1.assign(nv, std::vector<std::uint64_t>(words, 0));
    l.adj2.assign(nv, std::vector<std::uint64_t>(words, 0));

    std::vector<std::int64_t> vid(g.order(), -1);
    for (std::uint32_t i = 0; i < nv; ++i) vid[l.vertices[i]] = i;

    // (S u -S) \ {0} decides the type of an existing edge.
    GroupSubset s_pm = (s | s.negated());
    if (s_pm.test(0)) s_pm.reset(0);

    auto try_edge = [&](element_t x, element_t y) {
        if (x == y) return;
        std::int64_t u = vid[x], v = vid[y];
        if (u < 0 || v < 0) return;
        element_t diff = g.sub(x, y);
        if (s_pm.test(diff)) {
            row_set(l.adj1[std::size_t(u)], std::uint32_t(v));
            row_set(l.adj1[std::size_t(v)], std::uint32_t(u));
        } else {
            row_set(l.adj2[std::size_t(u)], std::uint32_t(v));
            row_set(l.adj2[std::size_t(v)], std::uint32_t(u));
        }
    };

    s.for_each([&](element_t sv) {
        for (std::uint32_t i = 0; i < nv; ++i) {
            element_t x = l.vertices[i];
            // {x, y, sv} with x + y = sv
            element_t y = g.sub(sv, x);
            if (y != x && sv != x && sv != y && vid[y] >= 0) try_edge(x, y);
            // {x, y, sv} with y = x + sv
            y = g.add(x, sv);
            if (y != x && sv != x && sv != y && vid[y] >= 0) try_edge(x, y);
            // y = x - sv is the same unordered pair seen from the other side
        }
    });

    // loops: x = s + s' or x = s - s' for distinct s, s' in S, with x
    // distinct from both
    const auto svals = s.elements();
    for (std::size_t i = 0; i < svals.size(); ++i)
        for (std::size_t j = 0; j < svals.size(); ++j) {
            if (i == j) continue;
            element_t sum = g.add(svals[i], svals[j]);
            if (i < j && sum != svals[i] && sum != svals[j] && b.test(sum))
                l.loops.set(sum);
            element_t diff = g.sub(svals[i], svals[j]);
            if (diff != svals[i] && diff != svals[j] && b.test(diff))
                l.loops.set(diff);
        }

    return l;
}

namespace {

// B is the nontrivial coset of an index-2 subgroup and S avoids B.
bool section5_setting(const LinkGraph& l, std::string& why)
{
    const AbelianGroup& g = *l.group;
    if (g.order() % 2 != 0) { why = "group order is odd"; return false; }
    if (l.vertex_count() != g.order() / 2) { why = "B is not half the group"; return false; }
    if (g.order() > 4096) { why = "group too large for the coset check"; return false; }
    GroupSubset b = GroupSubset::from_elements(g, l.vertices);
    if (b.test(0)) { why = "B contains the identity"; return false; }
    if (l.source.intersects(b)) { why = "S meets B"; return false; }
    GroupSubset h = b.complement();
    bool closed = true;
    const auto hs = h.elements();
    for (std::size_t i = 0; i < hs.size() && closed; ++i)
        for (std::size_t j = i; j < hs.size(); ++j)
            if (!h.test(g.add(hs[i], hs[j]))) { closed = false; break; }
    if (!closed) { why = "complement of B is not a subgroup"; return false; }
    return true;
}

}  // namespace

DegreeProfile degree_profile(const LinkGraph& l)
{
    DegreeProfile p;
    const std::uint32_t nv = l.vertex_count();
    p.d1.resize(nv);
    p.d2.resize(nv);
    std::uint32_t dmin = ~0u, dmax = 0;
    for (std::uint32_t v = 0; v < nv; ++v) {
        p.d1[v] = l.degree1(v);
        p.d2[v] = l.degree2(v);
        std::uint32_t d = p.d1[v] + p.d2[v];
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    p.delta = nv ? dmin : 0;
    p.Delta = dmax;

    p.setting_ok = section5_setting(l, p.warning);
    if (!p.setting_ok) {
        p.warning = "claim checks skipped: " + p.warning;
        return p;
    }

    GroupSubset s_pm = l.source | l.source.negated();
    if (s_pm.test(0)) s_pm.reset(0);
    const std::uint32_t want_d1 = s_pm.size();
    const std::uint32_t s_size = l.source.size();

    p.claims_ok = l.loops.empty();
    for (std::uint32_t v = 0; v < nv && p.claims_ok; ++v)
        if (p.d1[v] != want_d1 || p.d2[v] > s_size) p.claims_ok = false;
    if (p.claims_ok && nv) {
        bool zero_and_symmetric =
            l.source.test(0) && l.source == l.source.negated();
        std::uint64_t cap = zero_and_symmetric ? 2ull * p.delta + 1 : 2ull * p.delta;
        if (p.Delta > cap) p.claims_ok = false;
    }
    return p;
}

EdgeCounts edge_counts(const LinkGraph& l)
{
    EdgeCounts e;
    e.e1 = l.edges1();
    e.e2 = l.edges2();
    e.total = e.e1 + e.e2;

    std::string why;
    e.setting_ok = section5_setting(l, why);

    const AbelianGroup& g = *l.group;
    GroupSubset s_union = l.source | l.source.negated();
    GroupSubset s_pm = s_union;
    if (s_pm.test(0)) s_pm.reset(0);
    double r_pow = double(std::uint64_t(1) << g.two_rank());
    e.lower_bound = (double(s_pm.size()) + double(l.source.size())) / 2.0 *
                        double(l.vertex_count()) -
                    double(l.source.size()) * (double(s_union.size()) + 1.0) * r_pow;
    e.bound_ok = double(e.total) >= e.lower_bound;
    return e;
}

std::uint32_t ComponentTally::total() const
{
    std::uint32_t t = k1 + k2 + k3 + k4 + c4 + prism;
    for (auto& [_, c] : other) t += c;
    return t;
}

ComponentTally component_census(const SimpleGraph& g)
{
    ComponentTally tally;
    std::uint64_t seen = 0;
    for (std::uint32_t v0 = 0; v0 < g.n; ++v0) {
        if ((seen >> v0) & 1u) continue;
        // flood fill
        std::uint64_t comp = 0, frontier = std::uint64_t(1) << v0;
        while (frontier) {
            comp |= frontier;
            std::uint64_t next = 0;
            std::uint64_t scan = frontier;
            while (scan) {
                std::uint32_t v = std::uint32_t(std::countr_zero(scan));
                scan &= scan - 1;
                next |= g.adj[v];
            }
            frontier = next & ~comp;
        }
        seen |= comp;

        std::uint32_t size = std::uint32_t(std::popcount(comp));
        std::vector<std::uint32_t> degs;
        std::uint32_t triangles = 0;
        std::uint64_t scan = comp;
        while (scan) {
            std::uint32_t v = std::uint32_t(std::countr_zero(scan));
            scan &= scan - 1;
            degs.push_back(std::uint32_t(std::popcount(g.adj[v] & comp)));
            std::uint64_t nb = g.adj[v] & comp;
            while (nb) {
                std::uint32_t u = std::uint32_t(std::countr_zero(nb));
                nb &= nb - 1;
                if (u > v) triangles += std::uint32_t(std::popcount(g.adj[v] & g.adj[u] & comp));
            }
        }
        triangles /= 3;
        std::sort(degs.begin(), degs.end());

        auto all_deg = [&](std::uint32_t d) {
            return std::all_of(degs.begin(), degs.end(), [d](std::uint32_t x) { return x == d; });
        };
        if (size == 1) ++tally.k1;
        else if (size == 2 && all_deg(1)) ++tally.k2;
        else if (size == 3 && all_deg(2)) ++tally.k3;
        else if (size == 4 && all_deg(2)) ++tally.c4;
        else if (size == 4 && all_deg(3)) ++tally.k4;
        else if (size == 6 && all_deg(3) && triangles == 2) ++tally.prism;
        else ++tally.other[size];
    }
    return tally;
}

ComponentTally component_census(const LinkGraph& l)
{
    SimpleGraph g = l.to_simple();
    g.forbidden = 0;  // census looks at the plain adjacency, loops aside
    return component_census(g);
}

}  // namespace sf
