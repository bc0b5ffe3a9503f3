#include "sf/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sf {

namespace {

std::uint32_t gcd_u32(std::uint32_t a, std::uint32_t b)
{
    while (b) { std::uint32_t t = a % b; a = b; b = t; }
    return a;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> factor_orders)
    : factors_(std::move(factor_orders))
{
    if (factors_.empty())
        throw std::invalid_argument("group: factor list is empty");
    std::uint64_t n = 1;
    for (std::uint32_t m : factors_) {
        if (m < 2)
            throw std::invalid_argument("group: every cyclic order must be >= 2");
        n *= m;
        if (n > kMaxOrder)
            throw std::invalid_argument("group: order exceeds cap " + std::to_string(kMaxOrder));
    }
    n_ = std::uint32_t(n);

    strides_.resize(factors_.size());
    std::uint32_t s = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        strides_[i] = s;
        s *= factors_[i];
    }

    // 2-primary decomposition: split each cyclic factor into its 2-power and
    // odd parts, collect alphas >= 2 sorted descending, count Z_2 factors.
    std::uint64_t odd = 1;
    for (std::uint32_t m : factors_) {
        std::uint32_t v = 0;
        while (m % 2 == 0) { m /= 2; ++v; }
        if (v == 1) ++r2_;
        else if (v >= 2) alphas_.push_back(v);
        odd *= m;
    }
    std::sort(alphas_.begin(), alphas_.end(), std::greater<>());
    odd_order_ = std::uint32_t(odd);

    std::uint64_t e = 1;
    for (std::uint32_t m : factors_)
        e = std::lcm(e, std::uint64_t(m));
    exponent_ = std::uint32_t(e);

    neg_table_.resize(n_);
    for (element_t x = 0; x < n_; ++x) {
        element_t r = 0;
        element_t rem = x;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            std::uint32_t d = rem % factors_[i];
            rem /= factors_[i];
            r += ((factors_[i] - d) % factors_[i]) * strides_[i];
        }
        neg_table_[x] = r;
    }

    if (n_ <= kAddTableCap) {
        add_table_.resize(std::size_t(n_) * n_);
        for (element_t a = 0; a < n_; ++a)
            for (element_t b = 0; b < n_; ++b)
                add_table_[std::size_t(a) * n_ + b] = std::uint16_t(add_slow(a, b));
    }
}

element_t AbelianGroup::add_slow(element_t a, element_t b) const
{
    element_t r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::uint32_t da = a % factors_[i];
        std::uint32_t db = b % factors_[i];
        a /= factors_[i];
        b /= factors_[i];
        std::uint32_t d = da + db;
        if (d >= factors_[i]) d -= factors_[i];
        r += d * strides_[i];
    }
    return r;
}

element_t AbelianGroup::mul(std::int64_t k, element_t a) const
{
    element_t r = 0;
    element_t rem = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t m = factors_[i];
        std::int64_t d = rem % factors_[i];
        rem /= factors_[i];
        std::int64_t kd = (k % m) * d % m;
        if (kd < 0) kd += m;
        r += element_t(kd) * strides_[i];
    }
    return r;
}

std::vector<std::uint32_t> AbelianGroup::decode(element_t x) const
{
    std::vector<std::uint32_t> d(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        d[i] = x % factors_[i];
        x /= factors_[i];
    }
    return d;
}

element_t AbelianGroup::encode(const std::vector<std::uint32_t>& digits) const
{
    if (digits.size() != factors_.size())
        throw std::invalid_argument("encode: digit count does not match factor count");
    element_t r = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (digits[i] >= factors_[i])
            throw std::invalid_argument("encode: digit out of range");
        r += digits[i] * strides_[i];
    }
    return r;
}

std::uint32_t AbelianGroup::element_order(element_t x) const
{
    std::uint64_t ord = 1;
    element_t rem = x;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::uint32_t d = rem % factors_[i];
        rem /= factors_[i];
        std::uint32_t oi = factors_[i] / gcd_u32(d, factors_[i]);
        ord = std::lcm(ord, std::uint64_t(oi));
    }
    return std::uint32_t(ord);
}

std::string AbelianGroup::spec_string() const
{
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(factors_[i]);
    }
    return s;
}

AbelianGroup parse_group_spec(const std::string& spec)
{
    std::vector<std::uint32_t> orders;
    std::string token;
    std::size_t col = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("group spec: " + what + " at column " +
                                    std::to_string(col + 1));
    };
    auto flush = [&]() {
        if (token.empty()) fail("empty factor");
        std::uint64_t v = 0;
        for (char c : token) {
            v = v * 10 + std::uint64_t(c - '0');
            if (v > AbelianGroup::kMaxOrder) fail("factor too large");
        }
        orders.push_back(std::uint32_t(v));
        token.clear();
    };
    for (col = 0; col < spec.size(); ++col) {
        char c = spec[col];
        if (c == ' ' || c == '\t') continue;
        if (c == ',') flush();
        else if (c >= '0' && c <= '9') token += c;
        else fail("bad character '" + std::string(1, c) + "'");
    }
    flush();
    return AbelianGroup(std::move(orders));
}

std::string GroupType::str() const
{
    switch (kind) {
        case Kind::type1: return "TypeI(" + std::to_string(p) + ")";
        case Kind::type2: return "TypeII";
        case Kind::type3: return "TypeIII(" + std::to_string(m) + ")";
    }
    return "?";
}

GroupType classify(const AbelianGroup& g)
{
    // Smallest prime p = 2 (mod 3) dividing n, by trial division.
    std::uint32_t n = g.order();
    std::uint32_t best = 0;
    std::uint32_t m = n;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= m; ++d) {
        if (m % d == 0) {
            if (d % 3 == 2) { best = d; break; }
            while (m % d == 0) m /= d;
        }
    }
    if (best == 0 && m > 1 && m % 3 == 2) best = m;
    if (best != 0)
        return GroupType{GroupType::Kind::type1, best, 0};
    if (n % 3 == 0)
        return GroupType{GroupType::Kind::type2, 0, 0};
    return GroupType{GroupType::Kind::type3, 0, g.exponent()};
}

std::uint64_t mu(const AbelianGroup& g)
{
    const std::uint64_t n = g.order();
    GroupType t = classify(g);
    std::uint64_t num, den;
    switch (t.kind) {
        case GroupType::Kind::type1:
            num = n * (t.p + 1); den = 3ull * t.p; break;
        case GroupType::Kind::type2:
            num = n; den = 3; break;
        case GroupType::Kind::type3:
            num = n * (t.m - 1); den = 3ull * t.m; break;
        default:
            throw std::logic_error("mu: bad type");
    }
    if (num % den != 0)
        throw std::logic_error("mu: non-integral value for " + g.spec_string());
    return num / den;
}

}  // namespace sf
