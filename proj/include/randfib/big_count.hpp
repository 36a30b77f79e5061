// big_count.hpp -- arbitrary-precision non-negative integers for exact counting

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randfib {

/// Unsigned arbitrary-precision integer. Covers exactly what the counting
/// recursions need: add, multiply, small powers, exact division by a machine
/// word, exact right shifts and float/log conversions.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v) {  // NOLINT: implicit by design, counts mix with literals
        if (v != 0) limbs_.push_back(v);
    }

    static BigCount from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const;  // throws when the value does not fit

    BigCount& operator+=(const BigCount& rhs);
    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    BigCount& operator*=(const BigCount& rhs) { return *this = mul(*this, rhs); }
    friend BigCount operator*(const BigCount& a, const BigCount& b) { return mul(a, b); }

    static BigCount mul(const BigCount& a, const BigCount& b);
    static BigCount pow(const BigCount& base, std::uint64_t exp);
    /// a - b; throws std::logic_error when b > a (counts never go negative).
    static BigCount sub(const BigCount& a, const BigCount& b);

    /// Quotient of division by a nonzero machine word; sets `rem`.
    BigCount div_u64(std::uint64_t d, std::uint64_t& rem) const;
    /// Quotient of an exact division; throws std::logic_error on a remainder.
    BigCount div_exact(std::uint64_t d) const;
    /// Right shift by `bits`; throws std::logic_error when low bits are set.
    BigCount shift_right_exact(std::uint64_t bits) const;

    friend bool operator==(const BigCount&, const BigCount&) = default;
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b);

    std::size_t bit_length() const;
    std::string to_decimal() const;
    std::size_t digits10() const { return to_decimal().size(); }

    /// Nearest double; +inf when the value exceeds the double range.
    double to_double() const;
    /// Natural logarithm; works far past the double range. Requires > 0.
    double log_natural() const;
    /// num/den as a double, formed from aligned high bits so neither operand
    /// needs to fit a double. Requires den > 0.
    static double ratio(const BigCount& num, const BigCount& den);

private:
    void trim();
    // little-endian limbs, no trailing zeros; empty means 0
    std::vector<std::uint64_t> limbs_;
};

}  // namespace randfib
