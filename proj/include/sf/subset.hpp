#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "sf/abelian.hpp"

namespace sf {

// Dense bitset over the elements of one group; the universal currency for
// sum-free sets, cosets and subgroups.  Holds a pointer to its group, which
// must outlive the subset.
class GroupSubset {
public:
    GroupSubset() = default;
    explicit GroupSubset(const AbelianGroup& g)
        : g_(&g), words_((g.order() + 63) / 64, 0) {}

    static GroupSubset full(const AbelianGroup& g);
    static GroupSubset of(const AbelianGroup& g, std::initializer_list<element_t> xs);
    static GroupSubset from_elements(const AbelianGroup& g, const std::vector<element_t>& xs);

    const AbelianGroup& group() const { return *g_; }
    bool attached() const { return g_ != nullptr; }
    std::uint32_t universe() const { return g_ ? g_->order() : 0; }

    bool test(element_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
    void set(element_t x)
    {
        std::uint64_t& w = words_[x >> 6];
        std::uint64_t bit = std::uint64_t(1) << (x & 63);
        if (!(w & bit)) { w |= bit; ++size_; }
    }
    void reset(element_t x)
    {
        std::uint64_t& w = words_[x >> 6];
        std::uint64_t bit = std::uint64_t(1) << (x & 63);
        if (w & bit) { w &= ~bit; --size_; }
    }

    std::uint32_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    GroupSubset operator|(const GroupSubset& o) const;
    GroupSubset operator&(const GroupSubset& o) const;
    GroupSubset operator-(const GroupSubset& o) const;  // set difference
    GroupSubset complement() const;
    GroupSubset negated() const;  // {-s : s in S}

    bool operator==(const GroupSubset& o) const
    {
        return g_ == o.g_ && words_ == o.words_;
    }
    bool subset_of(const GroupSubset& o) const;
    bool intersects(const GroupSubset& o) const;

    std::vector<element_t> elements() const;  // ascending element index

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                std::uint64_t lsb = bits & -bits;
                f(element_t(w * 64 + std::uint64_t(__builtin_ctzll(bits))));
                bits ^= lsb;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    const AbelianGroup* g_ = nullptr;
    std::vector<std::uint64_t> words_;
    std::uint32_t size_ = 0;
};

// Subgroup with the metadata the counting operations need.  rank2 is the
// 2-rank: the number of members x with 2x = 0 (identity included) is 2^rank2.
struct Subgroup {
    GroupSubset members;
    std::uint32_t rank2 = 0;
    std::uint32_t index = 0;  // |G| / |members|
};

// Promotes a closed member set to a Subgroup (computes rank2 and index).
Subgroup make_subgroup(GroupSubset members);

// Exact set {x : 2x = g}; its size is 0 or a power of two, never above 2^r.
GroupSubset solutions_2x(const AbelianGroup& g, element_t target);

// All elements of order exactly 2; the set has size 2^r - 1.
GroupSubset order2_elements(const AbelianGroup& g);

// The subgroup 2G = {2g : g in G}; its 2-rank equals r1.
Subgroup two_g_subgroup(const AbelianGroup& g);

// Homomorphism G -> Z_p determined by generator images c_i (requires
// m_i * c_i = 0 mod p for each factor).
struct ZpHom {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> gen_images;

    std::uint32_t eval(const AbelianGroup& g, element_t x) const;
};

// All surjective homomorphisms G -> Z_p (p prime); empty when p does not
// divide |G|.  Ordered lexicographically by generator-image tuple.
std::vector<ZpHom> homs_to_zp(const AbelianGroup& g, std::uint32_t p);

// All index-2 subgroups, each the kernel of a surjective hom G -> Z_2.
// There are exactly 2^r - 1 of them; among these, 2^r1 - 1 have rank2 = r
// and 2^r - 2^r1 have rank2 = r - 1.  Throws when |G| is odd.
std::vector<Subgroup> index2_subgroups(const AbelianGroup& g);

struct PrimeIndexSubgroup {
    Subgroup sub;
    ZpHom hom;  // lexicographically smallest hom with this kernel
};

// Kernels of surjective homs G -> Z_p, deduplicated by member set.
std::vector<PrimeIndexSubgroup> subgroups_of_prime_index(const AbelianGroup& g,
                                                         std::uint32_t p);

// Every subgroup, by exhaustive closure growth.  Capped at |G| <= 128.
std::vector<Subgroup> all_subgroups(const AbelianGroup& g);

// Exact count of subgroups of order k (requires k | n, |G| <= 128).
std::uint64_t count_subgroups_of_order(const AbelianGroup& g, std::uint32_t k);

}  // namespace sf
