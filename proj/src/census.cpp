#include "sf/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sf/linkgraph.hpp"
#include "sf/mis.hpp"

namespace sf {

namespace {

// Element-mask DFS core for groups of order <= 64.  A candidate element y
// can join the current set when no (distinct) Schur triple appears among
// the new triples involving y; see extension_stays_free for the case split.
struct MaskCensus {
    const AbelianGroup& g;
    std::uint32_t n;
    bool distinct;
    std::uint64_t domain;  // elements the DFS may branch on

    std::uint64_t count_all = 0;
    std::uint64_t count_max = 0;
    bool collect = false;
    std::vector<std::uint64_t>* out = nullptr;

    bool can_add(std::uint64_t set, element_t y) const
    {
        if (!distinct) {
            element_t yy = g.dbl(y);
            if (yy == y || ((set >> yy) & 1u)) return false;
            std::uint64_t scan = set;
            while (scan) {
                element_t a = element_t(std::countr_zero(scan));
                scan &= scan - 1;
                element_t z = g.add(y, a);
                if (z == y || ((set >> z) & 1u)) return false;
                if ((set >> g.sub(y, a)) & 1u) return false;
            }
            return true;
        }
        std::uint64_t scan = set;
        while (scan) {
            element_t a = element_t(std::countr_zero(scan));
            scan &= scan - 1;
            if (a != 0 && y != 0) {
                element_t z = g.add(y, a);
                if (z != a && ((set >> z) & 1u)) return false;
            }
            element_t b = g.sub(y, a);
            if (b != a && b != y && ((set >> b) & 1u)) return false;
        }
        return true;
    }

    bool is_maximal(std::uint64_t set) const
    {
        for (element_t y = 0; y < n; ++y)
            if (!((set >> y) & 1u) && can_add(set, y)) return false;
        return true;
    }

    void leaf(std::uint64_t set)
    {
        ++count_all;
        if (is_maximal(set)) {
            ++count_max;
            if (collect) out->push_back(set);
        }
    }

    void dfs(std::uint32_t i, std::uint64_t set)
    {
        while (i < n && !((domain >> i) & 1u)) ++i;
        if (i == n) {
            leaf(set);
            return;
        }
        dfs(i + 1, set);
        if (can_add(set, element_t(i))) dfs(i + 1, set | (std::uint64_t(1) << i));
    }
};

std::uint64_t full_mask(std::uint32_t n)
{
    return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

}  // namespace

CensusReport census(const AbelianGroup& g, bool distinct, bool maximal_only, CensusOptions opts)
{
    const std::uint32_t cap = maximal_only ? 32 : 26;
    if (g.order() > cap)
        throw std::invalid_argument("census: |G| exceeds cap " + std::to_string(cap));
    const std::uint32_t n = g.order();
    auto t0 = std::chrono::steady_clock::now();

    std::uint32_t workers = std::max(1u, opts.workers);
    // Parallel split: fix the membership of the first b elements.
    std::uint32_t b = 0;
    while ((1u << b) < workers && b + 1 < n) ++b;
    const std::uint32_t prefixes = 1u << b;

    struct Shard {
        std::uint64_t all = 0, max = 0;
        std::vector<std::uint64_t> sets;
    };
    std::vector<Shard> shards(prefixes);

    auto run_prefix = [&](std::uint32_t pat) {
        MaskCensus mc{g, n, distinct, full_mask(n)};
        mc.collect = opts.collect_witnesses;
        mc.out = &shards[pat].sets;
        // replay the prefix pattern through can_add; abandon infeasible ones
        std::uint64_t set = 0;
        for (std::uint32_t i = 0; i < b; ++i) {
            if (!((pat >> i) & 1u)) continue;
            if (!mc.can_add(set, element_t(i))) return;
            set |= std::uint64_t(1) << i;
        }
        mc.dfs(b, set);
        shards[pat].all = mc.count_all;
        shards[pat].max = mc.count_max;
    };

    if (workers == 1) {
        for (std::uint32_t pat = 0; pat < prefixes; ++pat) run_prefix(pat);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::uint32_t> next{0};
        for (std::uint32_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::uint32_t pat = next.fetch_add(1);
                    if (pat >= prefixes) return;
                    run_prefix(pat);
                }
            });
        for (auto& th : pool) th.join();
    }

    std::uint64_t all = 0, mx = 0;
    std::vector<std::uint64_t> masks;
    for (auto& sh : shards) {
        all += sh.all;
        mx += sh.max;
        masks.insert(masks.end(), sh.sets.begin(), sh.sets.end());
    }

    CensusReport rep;
    rep.group_spec = g.spec_string();
    if (distinct) {
        if (!maximal_only) rep.f_star = all;
        rep.f_star_max = mx;
    } else {
        if (!maximal_only) rep.f = all;
        rep.f_max = mx;
    }
    if (opts.collect_witnesses) {
        std::sort(masks.begin(), masks.end());
        std::vector<GroupSubset> ws;
        ws.reserve(masks.size());
        for (std::uint64_t m : masks) {
            GroupSubset s(g);
            std::uint64_t scan = m;
            while (scan) {
                s.set(element_t(std::countr_zero(scan)));
                scan &= scan - 1;
            }
            ws.push_back(std::move(s));
        }
        rep.witnesses = std::move(ws);
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.seconds = std::chrono::duration<double>(t1 - t0).count();
    return rep;
}

CensusReport census_full(const AbelianGroup& g, CensusOptions opts)
{
    CensusOptions inner = opts;
    inner.collect_witnesses = false;
    CensusReport plain = census(g, false, false, inner);
    CensusReport dist = census(g, true, false, inner);
    CensusReport rep;
    rep.group_spec = g.spec_string();
    rep.f = plain.f;
    rep.f_max = plain.f_max;
    rep.f_star = dist.f_star;
    rep.f_star_max = dist.f_star_max;
    rep.seconds = plain.seconds + dist.seconds;
    return rep;
}

ExtensionCounts count_extensions(const AbelianGroup& g, const GroupSubset& s,
                                 const GroupSubset& a, bool distinct, bool direct_check)
{
    if (!is_distinct_sumfree(s))
        throw std::invalid_argument("count_extensions: S is not distinct sum-free");
    if (s.intersects(a))
        throw std::invalid_argument("count_extensions: S and A must be disjoint");

    LinkGraph l = build_link_graph(g, s, a);
    SimpleGraph gr = l.to_simple();

    ExtensionCounts out;
    if (!direct_check) {
        out.mis_count = enumerate_mis(gr).count;
        return out;
    }
    std::uint64_t good = 0;
    std::uint64_t total = 0;
    for_each_mis(gr, [&](std::uint64_t vmask) {
        ++total;
        GroupSubset d = s;
        std::uint64_t scan = vmask;
        while (scan) {
            std::uint32_t v = std::uint32_t(std::countr_zero(scan));
            scan &= scan - 1;
            d.set(l.vertices[v]);
        }
        bool ok = distinct ? (is_distinct_sumfree(d) && is_maximal_distinct_sumfree(d))
                           : (is_sumfree(d) && is_maximal_sumfree(d));
        if (ok) ++good;
    });
    out.mis_count = total;
    out.maximal_extensions = good;
    return out;
}

std::vector<GroupSubset> maximal_extensions_in(const AbelianGroup& g, const GroupSubset& s,
                                               const GroupSubset& a, bool distinct)
{
    if (g.order() > 32)
        throw std::invalid_argument("maximal_extensions_in: |G| exceeds cap 32");
    bool base_free = distinct ? is_distinct_sumfree(s) : is_sumfree(s);
    if (!base_free)
        throw std::invalid_argument("maximal_extensions_in: S fails the freeness test");
    if (s.intersects(a))
        throw std::invalid_argument("maximal_extensions_in: S and A must be disjoint");

    std::uint64_t base = 0;
    s.for_each([&](element_t x) { base |= std::uint64_t(1) << x; });
    std::uint64_t domain = 0;
    a.for_each([&](element_t x) { domain |= std::uint64_t(1) << x; });

    std::vector<std::uint64_t> masks;
    MaskCensus mc{g, g.order(), distinct, domain};
    mc.collect = true;
    mc.out = &masks;
    mc.dfs(0, base);

    std::sort(masks.begin(), masks.end());
    std::vector<GroupSubset> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) {
        GroupSubset d(g);
        std::uint64_t scan = m;
        while (scan) {
            d.set(element_t(std::countr_zero(scan)));
            scan &= scan - 1;
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<std::uint64_t> generated_maximal_sets(const AbelianGroup& g, const GroupSubset& a,
                                                  const GroupSubset& s)
{
    if (g.order() > 64)
        throw std::invalid_argument("generated_maximal_sets: |G| exceeds cap 64");
    LinkGraph l = build_link_graph(g, s, a);
    SimpleGraph gr = l.to_simple();
    std::vector<std::uint64_t> out;
    for_each_mis(gr, [&](std::uint64_t vmask) {
        GroupSubset d = s;
        std::uint64_t scan = vmask;
        while (scan) {
            std::uint32_t v = std::uint32_t(std::countr_zero(scan));
            scan &= scan - 1;
            d.set(l.vertices[v]);
        }
        if (is_distinct_sumfree(d) && is_maximal_distinct_sumfree(d)) {
            std::uint64_t m = 0;
            d.for_each([&](element_t x) { m |= std::uint64_t(1) << x; });
            out.push_back(m);
        }
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::uint64_t count_common(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    std::uint64_t c = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

}  // namespace

ClaimsReport verify_claims_512_515(const AbelianGroup& g)
{
    if (g.order() % 2 != 0)
        throw std::invalid_argument("verify_claims_512_515: group order must be even");
    if (g.order() > 24)
        throw std::invalid_argument("verify_claims_512_515: |G| exceeds cap 24");

    ClaimsReport rep;
    rep.group_spec = g.spec_string();
    rep.bound_ss = std::pow(3.0, double(g.order()) / 12.0);

    // All nontrivial index-2 cosets A, and the order-2 shifts s outside A.
    std::vector<GroupSubset> cosets;
    for (const Subgroup& h : index2_subgroups(g))
        cosets.push_back(h.members.complement());
    GroupSubset zero_only = GroupSubset::of(g, {0});
    GroupSubset ord2 = order2_elements(g);

    struct Fam {
        std::size_t coset;
        GroupSubset source;
        std::vector<std::uint64_t> gen;
        bool shifted;
        element_t s = 0;
    };
    std::vector<Fam> fams;
    for (std::size_t ci = 0; ci < cosets.size(); ++ci) {
        fams.push_back(
            {ci, zero_only, generated_maximal_sets(g, cosets[ci], zero_only), false, 0});
        std::vector<element_t> shifts;
        ord2.for_each([&](element_t s) {
            if (!cosets[ci].test(s)) shifts.push_back(s);
        });
        for (element_t s : shifts) {
            GroupSubset src = GroupSubset::of(g, {0, s});
            fams.push_back({ci, src, generated_maximal_sets(g, cosets[ci], src), true, s});
        }
    }

    for (std::size_t i = 0; i < fams.size(); ++i)
        for (std::size_t j = i + 1; j < fams.size(); ++j) {
            const Fam& x = fams[i];
            const Fam& y = fams[j];
            std::uint64_t common = count_common(x.gen, y.gen);
            if (!x.shifted && !y.shifted) {
                if (x.coset == y.coset) continue;  // same pair
                ++rep.pairs_00;
                rep.max_common_00 = std::max(rep.max_common_00, common);
                if (common > 1) rep.ok_00 = false;
            } else if (x.shifted != y.shifted) {
                ++rep.pairs_0s;
                rep.max_common_0s = std::max(rep.max_common_0s, common);
                if (common > 0) rep.ok_0s = false;
            } else {
                if (x.coset == y.coset && x.s == y.s) continue;
                ++rep.pairs_ss;
                rep.max_common_ss = std::max(rep.max_common_ss, common);
                if (double(common) > rep.bound_ss) rep.ok_ss = false;
            }
        }
    return rep;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial)
{
    SplitMix64 s{seed ^ (0xA0761D6478BD642Full * (trial + 1))};
    return s.next();
}

}  // namespace

std::vector<GnpSample> gnp_experiment(const AbelianGroup& g, double p, std::uint32_t trials,
                                      std::uint64_t seed, GnpOptions opts)
{
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("gnp_experiment: p must lie in [0, 1]");
    if (trials < 1)
        throw std::invalid_argument("gnp_experiment: trials must be >= 1");

    const std::uint64_t mu_g = mu(g);
    std::vector<GnpSample> out(trials);

    auto run_trial = [&](std::uint32_t t) {
        GnpSample& smp = out[t];
        smp.p = p;
        smp.trial = t;
        smp.derived_seed = derive_trial_seed(seed, t);
        SplitMix64 rng{smp.derived_seed};
        GroupSubset sample(g);
        for (std::uint32_t attempt = 0;; ++attempt) {
            sample = GroupSubset(g);
            for (element_t x = 0; x < g.order(); ++x)
                if (rng.next_double() < p) sample.set(x);
            if (sample.size() <= opts.max_sample) break;
            if (!opts.resample_oversize || attempt >= 100)
                throw std::runtime_error(
                    "gnp_experiment: sample of size " + std::to_string(sample.size()) +
                    " exceeds the exact-solver cap " + std::to_string(opts.max_sample));
        }
        smp.sample = sample.elements();
        smp.largest_sumfree = max_free_subset_size(g, sample, false);
        smp.ratio = p > 0.0 ? double(smp.largest_sumfree) / (double(mu_g) * p) : 0.0;
    };

    std::uint32_t workers = std::max(1u, opts.workers);
    if (workers == 1) {
        for (std::uint32_t t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::uint32_t> next{0};
        std::exception_ptr err;
        std::mutex err_mu;
        for (std::uint32_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                try {
                    for (;;) {
                        std::uint32_t t = next.fetch_add(1);
                        if (t >= trials) return;
                        run_trial(t);
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        if (err) std::rethrow_exception(err);
    }
    return out;
}

}  // namespace sf
