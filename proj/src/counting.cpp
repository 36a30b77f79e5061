#include "randfib/counting.hpp"

#include <cmath>
#include <limits>

namespace randfib {

CountingContext::CountingContext(std::uint32_t m, std::size_t digit_cap)
    : m_(m), digit_cap_(digit_cap) {
    if (m < 1) throw std::invalid_argument("family parameter m must be >= 1");
    l_.assign(3, BigCount());
    l_[1] = 1;
    l_[2] = 1;
    d_.assign(3, BigCount());
    d_[1] = 1;
    d_[2] = m - 1;
}

void CountingContext::ensure_sequences(std::uint32_t n) const {
    // caller holds memo_mutex_
    const BigCount mul(m_);
    while (l_.size() <= n) {
        const std::size_t q = l_.size();
        l_.push_back(mul * l_[q - 1] + l_[q - 2]);
        d_.push_back(mul * d_[q - 1] + d_[q - 2]);
    }
}

BigCount CountingContext::length_l(std::uint32_t n) const {
    if (n < 1) throw std::invalid_argument("generation index must be >= 1");
    std::lock_guard<std::mutex> lock(memo_mutex_);
    ensure_sequences(n);
    return l_[n];
}

std::uint32_t CountingContext::length_l_u32(std::uint32_t n) const {
    const BigCount l = length_l(n);
    if (l > BigCount(std::numeric_limits<std::uint32_t>::max()))
        throw std::overflow_error("word length does not fit 32 bits");
    return static_cast<std::uint32_t>(l.as_u64());
}

BigCount CountingContext::d_exponent(std::uint32_t n) const {
    if (n < 1) throw std::invalid_argument("generation index must be >= 1");
    std::lock_guard<std::mutex> lock(memo_mutex_);
    ensure_sequences(n);
    return d_[n];
}

double CountingContext::length_l_binet(std::uint32_t n) const {
    if (n < 1) throw std::invalid_argument("generation index must be >= 1");
    // g_n = (lambda^n - mu^n)/sqrt(D) solves the recursion with seeds 0, 1;
    // the l seeds (1, 1) need the correction l_n = g_n - (m-1) g_{n-1}.
    // For m = 1 this is the bare closed form.
    const double root = std::sqrt(static_cast<double>(m_) * m_ + 4.0);
    const double lam = (m_ + root) / 2.0;
    const double mu = (m_ - root) / 2.0;
    const double g_n = (std::pow(lam, n) - std::pow(mu, n)) / root;
    const double g_prev = (std::pow(lam, n - 1) - std::pow(mu, n - 1)) / root;
    return g_n - (static_cast<double>(m_) - 1.0) * g_prev;
}

std::uint32_t CountingContext::binet_float_exact_max() const {
    // Exact rounding needs l_n < 2^53 and the accumulated pow() error under
    // half a unit; probe against the exact sequence and document the result.
    const BigCount cap(std::uint64_t{1} << 53);
    std::uint32_t n = 1;
    while (length_l(n + 1) < cap) {
        const double b = length_l_binet(n + 1);
        if (BigCount(static_cast<std::uint64_t>(std::llround(b))) != length_l(n + 1))
            break;
        ++n;
    }
    return n;
}

BigCount CountingContext::length_l_binet_exact(std::uint32_t n) const {
    if (n < 1) throw std::invalid_argument("generation index must be >= 1");
    const std::uint64_t D = static_cast<std::uint64_t>(m_) * m_ + 4;
    // pairs (a, b) stand for a + b*sqrt(D); lambda^q = (a_q + b_q sqrt(D))/2^q
    // with the 2^q denominator implied by the exponent
    auto mul_pair = [D](const BigCount& xa, const BigCount& xb, const BigCount& ya,
                        const BigCount& yb, BigCount& oa, BigCount& ob) {
        oa = xa * ya + BigCount(D) * (xb * yb);
        ob = xa * yb + xb * ya;
    };
    auto lambda_pow = [&](std::uint32_t exp, BigCount& a, BigCount& b) {
        a = 1;
        b = 0;
        BigCount sa(m_), sb(1);
        while (exp > 0) {
            BigCount ta, tb;
            if (exp & 1) {
                mul_pair(a, b, sa, sb, ta, tb);
                a = ta;
                b = tb;
            }
            exp >>= 1;
            if (exp > 0) {
                mul_pair(sa, sb, sa, sb, ta, tb);
                sa = ta;
                sb = tb;
            }
        }
    };
    // lambda^q - mu^q = 2 b_q sqrt(D) / 2^q, so g_q = b_q >> (q-1) is the
    // seed-(0,1) solution of the recursion; the shifts being exact is part
    // of the check. The l seeds (1, 1) need l_n = g_n - (m-1) g_{n-1}.
    BigCount a, b;
    lambda_pow(n, a, b);
    const BigCount g_n = b.shift_right_exact(n - 1);
    if (m_ == 1 || n == 1) return g_n;
    lambda_pow(n - 1, a, b);
    const BigCount g_prev = b.shift_right_exact(n - 2);
    return BigCount::sub(g_n, BigCount(m_ - 1) * g_prev);
}

BigCount CountingContext::count_A_closed(std::uint32_t n) const {
    if (n < 1) throw std::invalid_argument("generation index must be >= 1");
    if (n <= 2) return BigCount(1);
    const double est = digits10_A_estimate(n);
    if (est > static_cast<double>(digit_cap_))
        throw DigitCapExceeded("|A_n| exceeds the digit cap", est);
    BigCount result(1);
    for (std::uint32_t i = 2; i <= n - 1; ++i) {
        const BigCount base(static_cast<std::uint64_t>(m_) * (n - i) + 1);
        const BigCount d = d_exponent(i - 1);
        result *= BigCount::pow(base, d.as_u64());
    }
    return result;
}

BigCount CountingContext::count_A_rec(std::uint32_t n) const {
    if (n < 1) throw std::invalid_argument("generation index must be >= 1");
    if (n <= 2) return BigCount(1);
    const double est = digits10_A_estimate(n);
    if (est > static_cast<double>(digit_cap_))
        throw DigitCapExceeded("|A_n| exceeds the digit cap", est);
    // |A_{q+1}| = (m(q-1)+1) / (m(q-2)+1) * |A_q|^m * |A_{q-1}|
    BigCount prev(1), cur(1);  // |A_1|, |A_2|
    for (std::uint32_t q = 2; q < n; ++q) {
        const std::uint64_t num = static_cast<std::uint64_t>(m_) * (q - 1) + 1;
        const std::uint64_t den = static_cast<std::uint64_t>(m_) * (q - 2) + 1;
        BigCount next = BigCount::pow(cur, m_) * prev * BigCount(num);
        next = next.div_exact(den);
        prev = cur;
        cur = next;
    }
    return cur;
}

BigCount CountingContext::count_union_product(std::uint32_t n, std::uint32_t k) const {
    if (n < 2) throw std::invalid_argument("union product needs n >= 2");
    if (k < 1) throw std::invalid_argument("union product needs k >= 1");
    const std::uint64_t num = static_cast<std::uint64_t>(m_) * (n - 2) + k + 1;
    const std::uint64_t den = static_cast<std::uint64_t>(m_) * (n - 2) + 1;
    BigCount value = BigCount::pow(count_A_closed(n), k) * count_A_closed(n - 1) *
                     BigCount(num);
    return value.div_exact(den);
}

double CountingContext::log_count_A(std::uint32_t n) const {
    if (n < 3) throw std::invalid_argument("log|A_n| series needs n >= 3");
    std::lock_guard<std::mutex> lock(memo_mutex_);
    ensure_sequences(n);
    double sum = 0;
    for (std::uint32_t i = 2; i <= n - 1; ++i) {
        const double base = static_cast<double>(m_) * (n - i) + 1.0;
        sum += d_[i - 1].to_double() * std::log(base);
    }
    return sum;
}

double CountingContext::digits10_A_estimate(std::uint32_t n) const {
    if (n <= 2) return 1.0;
    const double over = 2.0 * static_cast<double>(digit_cap_) + 16.0;
    // Growth pre-bound so absurd n never materializes the d memo:
    // d_i >= phi^{i-4} for i >= 4, and digits >= d_{n-2} * log10(2).
    if (n >= 8) {
        const double phi = (m_ + std::sqrt(static_cast<double>(m_) * m_ + 4.0)) / 2.0;
        const double log10_d_low = static_cast<double>(n - 6) * std::log10(phi);
        if (log10_d_low > std::log10(over) + 1.0) return over;
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    ensure_sequences(n);
    double digits = 0;
    for (std::uint32_t i = n - 1; i >= 2; --i) {  // largest terms first
        const double base = static_cast<double>(m_) * (n - i) + 1.0;
        digits += d_[i - 1].to_double() * std::log10(base);
        if (digits > over) return digits;
    }
    return digits + 1.0;
}

}  // namespace randfib
