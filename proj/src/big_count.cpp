#include "randfib/big_count.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randfib {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;
}  // namespace

BigCount BigCount::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    BigCount r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
        r = mul(r, BigCount(10));
        r += BigCount(static_cast<u64>(c - '0'));
    }
    return r;
}

std::uint64_t BigCount::as_u64() const {
    if (limbs_.size() > 1) throw std::overflow_error("count does not fit 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
    if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        u128 s = static_cast<u128>(limbs_[i]) + carry;
        if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
        limbs_[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
        if (carry == 0 && i >= rhs.limbs_.size()) break;
    }
    if (carry) limbs_.push_back(carry);
    return *this;
}

BigCount BigCount::mul(const BigCount& a, const BigCount& b) {
    if (a.is_zero() || b.is_zero()) return BigCount();
    BigCount r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        const u64 ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(ai) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        r.limbs_[i + b.limbs_.size()] = carry;
    }
    r.trim();
    return r;
}

BigCount BigCount::sub(const BigCount& a, const BigCount& b) {
    if (b > a) throw std::logic_error("count subtraction would go negative");
    BigCount r = a;
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        const u64 take = (i < b.limbs_.size() ? b.limbs_[i] : 0);
        const u64 before = r.limbs_[i];
        r.limbs_[i] = before - take - borrow;
        borrow = (before < take || (before == take && borrow)) ? 1 : 0;
        if (borrow == 0 && i >= b.limbs_.size()) break;
    }
    r.trim();
    return r;
}

BigCount BigCount::pow(const BigCount& base, std::uint64_t exp) {
    BigCount result(1), sq = base;
    while (exp > 0) {
        if (exp & 1) result = mul(result, sq);
        exp >>= 1;
        if (exp > 0) sq = mul(sq, sq);
    }
    return result;
}

BigCount BigCount::div_u64(std::uint64_t d, std::uint64_t& rem) const {
    if (d == 0) throw std::invalid_argument("division by zero");
    BigCount q;
    q.limbs_.assign(limbs_.size(), 0);
    u64 r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (static_cast<u128>(r) << 64) | limbs_[i];
        q.limbs_[i] = static_cast<u64>(cur / d);
        r = static_cast<u64>(cur % d);
    }
    q.trim();
    rem = r;
    return q;
}

BigCount BigCount::div_exact(std::uint64_t d) const {
    u64 rem = 0;
    BigCount q = div_u64(d, rem);
    if (rem != 0) throw std::logic_error("division expected to be exact left a remainder");
    return q;
}

BigCount BigCount::shift_right_exact(std::uint64_t bits) const {
    const std::size_t limb_shift = bits / 64;
    const unsigned bit_shift = bits % 64;
    if (limb_shift >= limbs_.size() && !is_zero())
        throw std::logic_error("exact shift drops set bits");
    for (std::size_t i = 0; i < limb_shift && i < limbs_.size(); ++i)
        if (limbs_[i] != 0) throw std::logic_error("exact shift drops set bits");
    if (bit_shift != 0 && limb_shift < limbs_.size() &&
        (limbs_[limb_shift] & ((u64{1} << bit_shift) - 1)) != 0)
        throw std::logic_error("exact shift drops set bits");
    BigCount r;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
        u64 lo = limbs_[i] >> bit_shift;
        if (bit_shift != 0 && i + 1 < limbs_.size())
            lo |= limbs_[i + 1] << (64 - bit_shift);
        r.limbs_.push_back(lo);
    }
    r.trim();
    return r;
}

std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::size_t BigCount::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - __builtin_clzll(limbs_.back()));
}

std::string BigCount::to_decimal() const {
    if (is_zero()) return "0";
    // Peel 19-digit base-10^19 chunks from the low end.
    constexpr u64 kChunk = 10'000'000'000'000'000'000ull;
    BigCount cur = *this;
    std::vector<u64> chunks;
    while (!cur.is_zero()) {
        u64 rem = 0;
        cur = cur.div_u64(kChunk, rem);
        chunks.push_back(rem);
    }
    std::string out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(19 - part.size(), '0') + part;
    }
    return out;
}

double BigCount::to_double() const {
    double r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
        if (std::isinf(r)) return r;
    }
    return r;
}

namespace {

// Value approx mantissa * 2^exp with mantissa in [2^63, 2^64) (exact when the
// value fits 64 bits, in which case exp may make mantissa smaller).
void top_bits(const std::vector<u64>& limbs, std::size_t bitlen, double& mantissa,
              long& exp) {
    if (bitlen <= 64) {
        mantissa = static_cast<double>(limbs.empty() ? 0 : limbs[0]);
        exp = 0;
        return;
    }
    const std::size_t top = limbs.size() - 1;
    const unsigned used = bitlen - 64 * top;  // bits used in the top limb
    u64 m = limbs[top] << (64 - used);
    if (used < 64) m |= limbs[top - 1] >> used;
    mantissa = static_cast<double>(m);
    exp = static_cast<long>(bitlen) - 64;
}

}  // namespace

double BigCount::log_natural() const {
    if (is_zero()) throw std::domain_error("log of zero");
    double mant;
    long exp;
    top_bits(limbs_, bit_length(), mant, exp);
    return std::log(mant) + static_cast<double>(exp) * 0.6931471805599453094;
}

double BigCount::ratio(const BigCount& num, const BigCount& den) {
    if (den.is_zero()) throw std::domain_error("ratio with zero denominator");
    if (num.is_zero()) return 0.0;
    double mn, md;
    long en, ed;
    top_bits(num.limbs_, num.bit_length(), mn, en);
    top_bits(den.limbs_, den.bit_length(), md, ed);
    return (mn / md) * std::exp2(static_cast<double>(en - ed));
}

void BigCount::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

}  // namespace randfib
