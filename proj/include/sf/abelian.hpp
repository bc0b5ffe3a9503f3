#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sf {

using element_t = std::uint32_t;

// Finite abelian group given as a direct sum of cyclic groups
// Z_{m1} + Z_{m2} + ... + Z_{mk}.  Elements are encoded in mixed radix over
// the user-given factor order:
//
//   index = a1 + m1*(a2 + m2*(a3 + ...)),   a_i in [0, m_i),
//
// so index 0 is the identity and the encoding is stable regardless of any
// internal normalisation.  The canonical 2-primary decomposition
//
//   Z_{2^alpha_1} + ... + Z_{2^alpha_r1} + Z_2^r2 + K,   |K| odd, alpha_i >= 2,
//
// is computed once as metadata (it drives the classification and the
// subgroup counting, never the element encoding).
//
// Immutable after construction; all operations are pure reads, so a group
// can be shared freely across threads.
class AbelianGroup {
public:
    // Construction cap.  Arithmetic is supported up to kMaxOrder elements;
    // enumeration-style operations carry their own (much smaller) caps.
    static constexpr std::uint64_t kMaxOrder = 1u << 20;
    // Full n*n addition tables are only built for small groups; above this
    // addition decodes digits on the fly.
    static constexpr std::uint32_t kAddTableCap = 4096;

    explicit AbelianGroup(std::vector<std::uint32_t> factor_orders);

    std::uint32_t order() const { return n_; }
    const std::vector<std::uint32_t>& factors() const { return factors_; }

    element_t add(element_t a, element_t b) const
    {
        if (!add_table_.empty())
            return add_table_[std::size_t(a) * n_ + b];
        return add_slow(a, b);
    }
    element_t neg(element_t a) const { return neg_table_[a]; }
    element_t sub(element_t a, element_t b) const { return add(a, neg(b)); }
    element_t dbl(element_t a) const { return add(a, a); }

    // k*a for any integer k (k may be negative).
    element_t mul(std::int64_t k, element_t a) const;

    std::vector<std::uint32_t> decode(element_t x) const;
    element_t encode(const std::vector<std::uint32_t>& digits) const;

    // Smallest t >= 1 with t*x = 0.
    std::uint32_t element_order(element_t x) const;
    // lcm of the factor orders = largest element order.
    std::uint32_t exponent() const { return exponent_; }

    // 2-primary decomposition metadata.
    const std::vector<std::uint32_t>& two_alphas() const { return alphas_; }
    std::uint32_t r1() const { return std::uint32_t(alphas_.size()); }
    std::uint32_t r2() const { return r2_; }
    std::uint32_t two_rank() const { return r1() + r2_; }      // r = r1 + r2
    std::uint32_t odd_part_order() const { return odd_order_; }

    std::string spec_string() const;  // "4,2,3"

private:
    element_t add_slow(element_t a, element_t b) const;

    std::vector<std::uint32_t> factors_;
    std::vector<std::uint32_t> strides_;
    std::uint32_t n_ = 0;
    std::uint32_t r2_ = 0;
    std::uint32_t odd_order_ = 1;
    std::uint32_t exponent_ = 1;
    std::vector<std::uint32_t> alphas_;       // sorted non-increasing, each >= 2
    std::vector<element_t> neg_table_;
    std::vector<std::uint16_t> add_table_;    // n*n, only when n <= kAddTableCap
};

// Group spec grammar used by every CLI command: comma-separated cyclic
// orders, whitespace ignored, e.g. "4, 2,3" -> Z4+Z2+Z3.
AbelianGroup parse_group_spec(const std::string& spec);

// Classification of a finite abelian group by |G| mod small primes:
//  - type I(p):  p is the smallest prime p = 2 (mod 3) dividing |G|;
//  - type II:    no such prime, but 3 divides |G|;
//  - type III(m): neither, m = exponent of G.
struct GroupType {
    enum class Kind { type1, type2, type3 };
    Kind kind;
    std::uint32_t p = 0;  // type I only
    std::uint32_t m = 0;  // type III only
    std::string str() const;
};

GroupType classify(const AbelianGroup& g);

// Size of the largest sum-free subset, exact:
//   type I(p): n(1/3 + 1/3p);  type II: n/3;  type III(m): n(1/3 - 1/3m).
// Throws std::logic_error if the formula is non-integral (classification bug).
std::uint64_t mu(const AbelianGroup& g);

}  // namespace sf
