// counting.hpp -- exact sequences l_n, d_n and the inflated-set cardinalities

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "randfib/big_count.hpp"

namespace randfib {

/// Raised when an exact value would exceed the configured decimal-digit cap.
class DigitCapExceeded : public std::runtime_error {
public:
    DigitCapExceeded(std::string what, double digits_estimate)
        : std::runtime_error(std::move(what)), digits_estimate(digits_estimate) {}
    double digits_estimate;
};

/// Memoized exact integer sequences for one family parameter m:
///   l_1 = l_2 = 1,        l_n = m*l_{n-1} + l_{n-2}
///   d_1 = 1, d_2 = m-1,   d_n = m*d_{n-1} + d_{n-2}
///   |A_n| by closed-form product and by the rational recursion.
/// Memo growth is locked; reads of already-built values are plain loads, so
/// a warmed-up context can be shared across threads.
class CountingContext {
public:
    explicit CountingContext(std::uint32_t m, std::size_t digit_cap = 1'000'000);

    std::uint32_t m() const { return m_; }
    std::size_t digit_cap() const { return digit_cap_; }

    /// Common word length of generation n (n >= 1).
    BigCount length_l(std::uint32_t n) const;
    /// length_l as a machine word, for materialization code.
    std::uint32_t length_l_u32(std::uint32_t n) const;
    /// Exponent sequence of the closed-form product (n >= 1).
    BigCount d_exponent(std::uint32_t n) const;

    /// Floating evaluation of the closed-form (Binet-style) expression for
    /// l_n. Rounding reproduces length_l exactly while l_n < 2^53; see
    /// binet_float_exact_max().
    double length_l_binet(std::uint32_t n) const;
    /// Largest n for which the floating evaluation is guaranteed to round-trip.
    std::uint32_t binet_float_exact_max() const;
    /// The same closed form evaluated exactly in Z[sqrt(m^2+4)]:
    /// ((m+sqrt(D))/2)^n = (a + b*sqrt(D))/2^n with integer a, b, hence
    /// l_n = b / 2^{n-1}, an exact division checked at runtime.
    BigCount length_l_binet_exact(std::uint32_t n) const;

    /// |A_n| via the closed-form product (n = 1, 2 give 1).
    BigCount count_A_closed(std::uint32_t n) const;
    /// |A_n| via the rational recursion; the division must always be exact.
    BigCount count_A_rec(std::uint32_t n) const;
    /// Cardinality of the union of products with k+1 factors at level n.
    BigCount count_union_product(std::uint32_t n, std::uint32_t k) const;

    /// Natural log of |A_n| from the per-term series (n >= 3).
    double log_count_A(std::uint32_t n) const;
    /// Estimated decimal digits of |A_n|; returns early with a value above
    /// the cap when the sum is certain to blow past it.
    double digits10_A_estimate(std::uint32_t n) const;

private:
    void ensure_sequences(std::uint32_t n) const;

    std::uint32_t m_;
    std::size_t digit_cap_;
    mutable std::mutex memo_mutex_;
    mutable std::vector<BigCount> l_;  // index n, [0] unused
    mutable std::vector<BigCount> d_;
};

}  // namespace randfib
