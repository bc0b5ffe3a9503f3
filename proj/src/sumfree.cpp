#include "sf/sumfree.hpp"

#include <algorithm>
#include <stdexcept>

namespace sf {

bool is_schur_triple(const AbelianGroup& g, element_t x, element_t y, element_t z)
{
    return g.add(x, y) == z;
}

bool is_distinct_schur_triple(const AbelianGroup& g, element_t x, element_t y, element_t z)
{
    return x != y && x != z && y != z && g.add(x, y) == z;
}

bool is_sumfree(const GroupSubset& s)
{
    const AbelianGroup& g = s.group();
    const auto xs = s.elements();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j)
            if (s.test(g.add(xs[i], xs[j]))) return false;
    return true;
}

bool is_distinct_sumfree(const GroupSubset& s)
{
    const AbelianGroup& g = s.group();
    const auto xs = s.elements();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            element_t z = g.add(xs[i], xs[j]);
            if (z != xs[i] && z != xs[j] && s.test(z)) return false;
        }
    return true;
}

bool extension_stays_free(const GroupSubset& s, element_t y, bool distinct)
{
    const AbelianGroup& g = s.group();
    if (!distinct) {
        // new triples: y + a = z with a, z in S u {y}, or a + b = y with a, b in S
        if (s.test(g.dbl(y)) || g.dbl(y) == y) return false;
        bool bad = false;
        s.for_each([&](element_t a) {
            if (bad) return;
            element_t z = g.add(y, a);
            if (z == y || s.test(z)) { bad = true; return; }
            if (s.test(g.sub(y, a))) bad = true;
        });
        return !bad;
    }
    // distinct triples involving y:
    //   (y, a, y+a): a in S, a != 0, y != 0  (y+a lands in S; it cannot be y)
    //   (a, y-a, y): a in S, y-a in S, y != 2a
    bool bad = false;
    s.for_each([&](element_t a) {
        if (bad) return;
        if (a != 0 && y != 0) {
            element_t z = g.add(y, a);
            if (z != a && s.test(z)) { bad = true; return; }
        }
        element_t b = g.sub(y, a);
        if (b != a && b != y && a != y && s.test(b)) bad = true;
    });
    return !bad;
}

bool is_maximal_sumfree(const GroupSubset& s)
{
    if (!is_sumfree(s))
        throw std::invalid_argument("is_maximal_sumfree: input is not sum-free");
    const std::uint32_t n = s.universe();
    for (element_t y = 0; y < n; ++y)
        if (!s.test(y) && extension_stays_free(s, y, false)) return false;
    return true;
}

bool is_maximal_distinct_sumfree(const GroupSubset& s)
{
    if (!is_distinct_sumfree(s))
        throw std::invalid_argument("is_maximal_distinct_sumfree: input is not distinct sum-free");
    const std::uint32_t n = s.universe();
    for (element_t y = 0; y < n; ++y)
        if (!s.test(y) && extension_stays_free(s, y, true)) return false;
    return true;
}

namespace {

struct MaxFreeSearch {
    bool distinct;
    std::vector<element_t> order;  // candidates, most-constrained first
    GroupSubset chosen;
    std::uint32_t best = 0;

    void dfs(std::size_t pos, std::uint32_t size)
    {
        if (size + (order.size() - pos) <= best) return;  // bound
        if (pos == order.size()) {
            best = std::max(best, size);
            return;
        }
        element_t x = order[pos];
        if (extension_stays_free(chosen, x, distinct)) {
            chosen.set(x);
            dfs(pos + 1, size + 1);
            chosen.reset(x);
        }
        dfs(pos + 1, size);
    }
};

}  // namespace

std::uint32_t max_free_subset_size(const AbelianGroup& g, const GroupSubset& candidates,
                                   bool distinct)
{
    if (candidates.size() > 40)
        throw std::invalid_argument("max_free_subset_size: candidate set exceeds cap 40");
    const auto xs = candidates.elements();

    // Static most-constrained-first order: count the Schur triples inside
    // the candidate set through each element.
    std::vector<std::uint64_t> deg(xs.size(), 0);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j) {
            element_t z = g.add(xs[i], xs[j]);
            if (!candidates.test(z)) continue;
            if (distinct &&
                !is_distinct_schur_triple(g, xs[i], xs[j], z))
                continue;
            ++deg[i];
            ++deg[j];
            auto it = std::lower_bound(xs.begin(), xs.end(), z);
            if (it != xs.end() && *it == z) ++deg[std::size_t(it - xs.begin())];
        }
    std::vector<std::size_t> idx(xs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return xs[a] < xs[b];
    });

    MaxFreeSearch search{distinct, {}, GroupSubset(g), 0};
    search.order.reserve(xs.size());
    for (std::size_t i : idx) search.order.push_back(xs[i]);
    search.dfs(0, 0);
    return search.best;
}

std::uint32_t mu_star_bruteforce(const AbelianGroup& g)
{
    if (g.order() > 24)
        throw std::invalid_argument("mu_star_bruteforce: |G| exceeds cap 24");
    return max_free_subset_size(g, GroupSubset::full(g), true);
}

GroupSubset extremal_sumfree_type1(const AbelianGroup& g, const Subgroup& h, element_t gen)
{
    GroupType t = classify(g);
    if (t.kind != GroupType::Kind::type1)
        throw std::invalid_argument("extremal_sumfree_type1: group is not type I");
    if (h.index != t.p)
        throw std::invalid_argument("extremal_sumfree_type1: subgroup index is not p");
    if (h.members.test(gen))
        throw std::invalid_argument("extremal_sumfree_type1: g lies in H");

    GroupSubset b(g);
    for (std::uint32_t k = 0; 3 * k <= t.p - 2; ++k) {
        element_t rep = g.mul(std::int64_t(3) * k + 1, gen);
        h.members.for_each([&](element_t m) { b.set(g.add(rep, m)); });
    }
    return b;
}

std::optional<ZpHom> gr_structure_check(const AbelianGroup& g, const GroupSubset& a)
{
    GroupType t = classify(g);
    if (t.kind != GroupType::Kind::type1)
        throw std::invalid_argument("gr_structure_check: group is not type I");
    const std::uint32_t p = t.p;
    const std::uint32_t k = (p - 2) / 3;
    for (const ZpHom& psi : homs_to_zp(g, p)) {
        bool ok = true;
        a.for_each([&](element_t x) {
            if (!ok) return;
            std::uint32_t v = psi.eval(g, x);
            if (v < k + 1 || v > 2 * k + 1) ok = false;
        });
        if (ok) return psi;
    }
    return std::nullopt;
}

std::string ConstructionFamily::kind_str() const
{
    switch (kind) {
        case Kind::prop32: return "prop32";
        case Kind::z5k: return "z5k";
        case Kind::prop53: return "prop53";
    }
    return "?";
}

ConstructionFamily construct_prop32(const AbelianGroup& g)
{
    GroupType t = classify(g);
    if (t.kind != GroupType::Kind::type1 || t.p < 5)
        throw std::invalid_argument("construct_prop32: requires a type I(p) group with p >= 5");

    auto subs = subgroups_of_prime_index(g, t.p);
    if (subs.empty())
        throw std::logic_error("construct_prop32: no index-p subgroup found");
    const Subgroup& h = subs.front().sub;  // lexicographically smallest hom

    element_t gen = 0;
    while (h.members.test(gen)) ++gen;  // smallest element outside H

    GroupSubset b = extremal_sumfree_type1(g, h, gen);
    if (b.size() != mu(g) || !is_sumfree(b) || !(b == b.negated()))
        throw std::logic_error("construct_prop32: extremal set failed its invariants");
    b.for_each([&](element_t x) {
        if (g.neg(x) == x)
            throw std::logic_error("construct_prop32: negation has a fixed point on B");
    });

    // Orbits {x, -x}, keyed by their smaller element.
    std::vector<std::pair<element_t, element_t>> orbits;
    b.for_each([&](element_t x) {
        element_t y = g.neg(x);
        if (x < y) orbits.emplace_back(x, y);
    });
    if (orbits.size() > 16)
        throw std::invalid_argument("construct_prop32: more than 2^16 sets would be emitted");

    ConstructionFamily fam;
    fam.kind = ConstructionFamily::Kind::prop32;
    fam.group = &g;
    fam.distinct_freeness = true;
    fam.subgroup_h = h.members;
    fam.gen = gen;
    fam.expected_count = std::uint64_t(1) << orbits.size();

    for (std::uint64_t mask = 0; mask < fam.expected_count; ++mask) {
        GroupSubset s(g);
        s.set(0);
        for (std::size_t i = 0; i < orbits.size(); ++i)
            s.set((mask >> i) & 1 ? orbits[i].second : orbits[i].first);
        fam.sets.push_back(std::move(s));
    }
    return fam;
}

ConstructionFamily construct_z5k(const AbelianGroup& g)
{
    for (std::uint32_t m : g.factors())
        if (m != 5)
            throw std::invalid_argument("construct_z5k: group must be Z_5^k");
    const std::size_t k = g.factors().size();

    // s = (1,0,...,0); B2 = {2} + Z_5^{k-1}; phi(b) = -b - s fixes only 2s.
    std::vector<std::uint32_t> digits(k, 0);
    digits[0] = 1;
    const element_t s = g.encode(digits);
    const element_t two_s = g.dbl(s);

    std::vector<element_t> b2;
    for (element_t x = 0; x < g.order(); ++x)
        if (x % 5 == 2) b2.push_back(x);

    auto phi = [&](element_t b) { return g.sub(g.neg(b), s); };

    std::vector<std::pair<element_t, element_t>> orbits;
    for (element_t b : b2) {
        element_t c = phi(b);
        if (c == b) {
            if (b != two_s)
                throw std::logic_error("construct_z5k: unexpected fixed point");
            continue;
        }
        if (b < c) orbits.emplace_back(b, c);
    }
    if (orbits.size() != (b2.size() - 1) / 2)
        throw std::logic_error("construct_z5k: orbit count mismatch");
    if (orbits.size() > 12)
        throw std::invalid_argument("construct_z5k: k too large, more than 3^12 sets");

    ConstructionFamily fam;
    fam.kind = ConstructionFamily::Kind::z5k;
    fam.group = &g;
    fam.distinct_freeness = false;  // sets are genuinely sum-free
    fam.shift = s;
    fam.expected_count = 1;
    for (std::size_t i = 0; i < orbits.size(); ++i) fam.expected_count *= 3;

    for (std::uint64_t code = 0; code < fam.expected_count; ++code) {
        GroupSubset out(g);
        out.set(s);
        std::uint64_t c = code;
        for (auto [b, bphi] : orbits) {
            // bphi = -b-s; choices: {b,-b}, {b,-b-s}, {b+s,-b-s}
            switch (c % 3) {
                case 0: out.set(b); out.set(g.neg(b)); break;
                case 1: out.set(b); out.set(bphi); break;
                case 2: out.set(g.add(b, s)); out.set(bphi); break;
            }
            c /= 3;
        }
        fam.sets.push_back(std::move(out));
    }
    return fam;
}

namespace {

// Deterministic splittable generator; used wherever seeded sampling is
// called for so results are identical across platforms and worker counts.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

bool sets_conflict(const ConstructionFamily& fam, const GroupSubset& a, const GroupSubset& b)
{
    GroupSubset u = a | b;
    return fam.distinct_freeness ? !is_distinct_sumfree(u) : !is_sumfree(u);
}

}  // namespace

FamilyCheck verify_family(const ConstructionFamily& fam, std::uint64_t seed)
{
    FamilyCheck chk;
    chk.count_ok = fam.sets.size() == fam.expected_count;

    chk.freeness_ok = true;
    for (const GroupSubset& s : fam.sets) {
        bool ok = fam.distinct_freeness ? is_distinct_sumfree(s) : is_sumfree(s);
        if (!ok) { chk.freeness_ok = false; break; }
    }

    chk.conflicts_ok = true;
    const std::uint64_t m = fam.sets.size();
    if (m <= (1u << 12)) {
        for (std::uint64_t i = 0; i < m && chk.conflicts_ok; ++i)
            for (std::uint64_t j = i + 1; j < m; ++j) {
                ++chk.pairs_checked;
                if (!sets_conflict(fam, fam.sets[i], fam.sets[j])) {
                    chk.conflicts_ok = false;
                    break;
                }
            }
    } else {
        chk.sampled = true;
        SplitMix64 rng{seed};
        for (int t = 0; t < 10000 && chk.conflicts_ok; ++t) {
            std::uint64_t i = rng.below(m);
            std::uint64_t j = rng.below(m);
            if (i == j) continue;
            ++chk.pairs_checked;
            if (!sets_conflict(fam, fam.sets[i], fam.sets[j]))
                chk.conflicts_ok = false;
        }
    }
    return chk;
}

}  // namespace sf
