#include "sf/subset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace sf {

GroupSubset GroupSubset::full(const AbelianGroup& g)
{
    GroupSubset s(g);
    for (element_t x = 0; x < g.order(); ++x) s.set(x);
    return s;
}

GroupSubset GroupSubset::of(const AbelianGroup& g, std::initializer_list<element_t> xs)
{
    GroupSubset s(g);
    for (element_t x : xs) {
        if (x >= g.order()) throw std::invalid_argument("subset: element out of range");
        s.set(x);
    }
    return s;
}

GroupSubset GroupSubset::from_elements(const AbelianGroup& g, const std::vector<element_t>& xs)
{
    GroupSubset s(g);
    for (element_t x : xs) {
        if (x >= g.order()) throw std::invalid_argument("subset: element out of range");
        s.set(x);
    }
    return s;
}

namespace {
void require_same_group(const GroupSubset& a, const GroupSubset& b)
{
    if (&a.group() != &b.group())
        throw std::invalid_argument("subset: operands belong to different groups");
}

std::uint32_t popcount_words(const std::vector<std::uint64_t>& ws)
{
    std::uint32_t c = 0;
    for (std::uint64_t w : ws) c += std::uint32_t(std::popcount(w));
    return c;
}
}  // namespace

GroupSubset GroupSubset::operator|(const GroupSubset& o) const
{
    require_same_group(*this, o);
    GroupSubset r(*g_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    r.size_ = popcount_words(r.words_);
    return r;
}

GroupSubset GroupSubset::operator&(const GroupSubset& o) const
{
    require_same_group(*this, o);
    GroupSubset r(*g_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    r.size_ = popcount_words(r.words_);
    return r;
}

GroupSubset GroupSubset::operator-(const GroupSubset& o) const
{
    require_same_group(*this, o);
    GroupSubset r(*g_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    r.size_ = popcount_words(r.words_);
    return r;
}

GroupSubset GroupSubset::complement() const
{
    GroupSubset r(*g_);
    for (element_t x = 0; x < g_->order(); ++x)
        if (!test(x)) r.set(x);
    return r;
}

GroupSubset GroupSubset::negated() const
{
    GroupSubset r(*g_);
    for_each([&](element_t x) { r.set(g_->neg(x)); });
    return r;
}

bool GroupSubset::subset_of(const GroupSubset& o) const
{
    require_same_group(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool GroupSubset::intersects(const GroupSubset& o) const
{
    require_same_group(*this, o);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::vector<element_t> GroupSubset::elements() const
{
    std::vector<element_t> v;
    v.reserve(size_);
    for_each([&](element_t x) { v.push_back(x); });
    return v;
}

Subgroup make_subgroup(GroupSubset members)
{
    const AbelianGroup& g = members.group();
    if (!members.test(0))
        throw std::invalid_argument("subgroup: member set misses the identity");
    if (members.size() <= 2048) {  // quadratic closure validation, desk scale only
        const auto ms = members.elements();
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = i; j < ms.size(); ++j)
                if (!members.test(g.add(ms[i], ms[j])))
                    throw std::invalid_argument("subgroup: member set is not closed");
    }
    std::uint32_t torsion = 0;  // members x with 2x = 0, identity included
    members.for_each([&](element_t x) {
        if (g.dbl(x) == 0) ++torsion;
    });
    if (torsion == 0 || (torsion & (torsion - 1)) != 0)
        throw std::logic_error("subgroup: 2-torsion count is not a power of two");
    Subgroup s;
    s.index = g.order() / members.size();
    s.rank2 = std::uint32_t(std::bit_width(torsion) - 1);
    s.members = std::move(members);
    return s;
}

GroupSubset solutions_2x(const AbelianGroup& g, element_t target)
{
    GroupSubset s(g);
    for (element_t x = 0; x < g.order(); ++x)
        if (g.dbl(x) == target) s.set(x);
    return s;
}

GroupSubset order2_elements(const AbelianGroup& g)
{
    GroupSubset s(g);
    for (element_t x = 1; x < g.order(); ++x)
        if (g.dbl(x) == 0) s.set(x);
    return s;
}

Subgroup two_g_subgroup(const AbelianGroup& g)
{
    GroupSubset s(g);
    for (element_t x = 0; x < g.order(); ++x) s.set(g.dbl(x));
    return make_subgroup(std::move(s));
}

std::uint32_t ZpHom::eval(const AbelianGroup& g, element_t x) const
{
    std::uint64_t acc = 0;
    const auto& factors = g.factors();
    element_t rem = x;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        std::uint32_t d = rem % factors[i];
        rem /= factors[i];
        acc += std::uint64_t(d) * gen_images[i];
    }
    return std::uint32_t(acc % p);
}

namespace {

bool is_prime_u32(std::uint32_t p)
{
    if (p < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::vector<ZpHom> homs_to_zp(const AbelianGroup& g, std::uint32_t p)
{
    if (!is_prime_u32(p))
        throw std::invalid_argument("homs_to_zp: p must be prime");
    std::vector<ZpHom> out;
    if (g.order() % p != 0) return out;

    // A generator image c_i is constrained by m_i * c_i = 0 (mod p): free
    // when p | m_i, forced to zero otherwise.  Enumerate all tuples in lex
    // order and keep the surjective (= nontrivial, p prime) ones.
    const auto& factors = g.factors();
    std::vector<std::size_t> free_pos;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i] % p == 0) free_pos.push_back(i);

    std::vector<std::uint32_t> images(factors.size(), 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_pos.size(); ++i) total *= p;
    for (std::uint64_t t = 1; t < total; ++t) {  // skip the trivial all-zero map
        std::uint64_t rem = t;
        for (std::size_t j = free_pos.size(); j-- > 0;) {
            images[free_pos[j]] = std::uint32_t(rem % p);
            rem /= p;
        }
        out.push_back(ZpHom{p, images});
    }
    std::sort(out.begin(), out.end(), [](const ZpHom& a, const ZpHom& b) {
        return a.gen_images < b.gen_images;
    });
    return out;
}

std::vector<Subgroup> index2_subgroups(const AbelianGroup& g)
{
    if (g.order() % 2 != 0)
        throw std::invalid_argument("index2_subgroups: no index-2 subgroup in an odd-order group");
    std::vector<Subgroup> out;
    for (const ZpHom& h : homs_to_zp(g, 2)) {
        GroupSubset ker(g);
        for (element_t x = 0; x < g.order(); ++x)
            if (h.eval(g, x) == 0) ker.set(x);
        out.push_back(make_subgroup(std::move(ker)));
    }
    return out;
}

std::vector<PrimeIndexSubgroup> subgroups_of_prime_index(const AbelianGroup& g, std::uint32_t p)
{
    std::vector<PrimeIndexSubgroup> out;
    std::vector<GroupSubset> seen;
    for (const ZpHom& h : homs_to_zp(g, p)) {
        GroupSubset ker(g);
        for (element_t x = 0; x < g.order(); ++x)
            if (h.eval(g, x) == 0) ker.set(x);
        bool dup = false;
        for (const GroupSubset& s : seen)
            if (s == ker) { dup = true; break; }
        if (dup) continue;
        seen.push_back(ker);
        out.push_back(PrimeIndexSubgroup{make_subgroup(std::move(ker)), h});
    }
    return out;
}

namespace {

// <H, g> as a member bitset: the union of cosets H + j*g until j*g folds
// back into H.
GroupSubset closure_with(const AbelianGroup& g, const GroupSubset& h, element_t x)
{
    GroupSubset r = h;
    element_t shift = x;
    while (!h.test(shift)) {
        h.for_each([&](element_t m) { r.set(g.add(m, shift)); });
        shift = g.add(shift, x);
    }
    return r;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const AbelianGroup& g)
{
    if (g.order() > 128)
        throw std::invalid_argument("all_subgroups: |G| exceeds cap 128");

    std::map<std::vector<std::uint64_t>, GroupSubset> found;
    GroupSubset trivial(g);
    trivial.set(0);
    found.emplace(trivial.words(), trivial);

    std::vector<GroupSubset> frontier{trivial};
    while (!frontier.empty()) {
        std::vector<GroupSubset> next;
        for (const GroupSubset& h : frontier) {
            for (element_t x = 1; x < g.order(); ++x) {
                if (h.test(x)) continue;
                GroupSubset k = closure_with(g, h, x);
                auto [it, fresh] = found.emplace(k.words(), k);
                if (fresh) next.push_back(k);
            }
        }
        frontier = std::move(next);
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& [_, members] : found)
        out.push_back(make_subgroup(members));
    return out;
}

std::uint64_t count_subgroups_of_order(const AbelianGroup& g, std::uint32_t k)
{
    if (k == 0 || g.order() % k != 0)
        throw std::invalid_argument("count_subgroups_of_order: k must divide |G|");
    std::uint64_t c = 0;
    for (const Subgroup& s : all_subgroups(g))
        if (s.members.size() == k) ++c;
    return c;
}

}  // namespace sf
