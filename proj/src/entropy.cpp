#include "randfib/entropy.hpp"

#include <cmath>

namespace randfib {

double h_A(const CountingContext& counting, std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("h_A needs n >= 3");
    const BigCount ln = counting.length_l(n);
    double sum = 0;
    for (std::uint32_t i = 2; i <= n - 1; ++i) {
        const double base = static_cast<double>(counting.m()) * (n - i) + 1.0;
        sum += std::log(base) * BigCount::ratio(counting.d_exponent(i - 1), ln);
    }
    return sum;
}

double h_F(FactorTable& factors, std::uint32_t n) {
    const std::size_t count = factors.count_F(n);
    const double ln = factors.generations().counting().length_l(n).to_double();
    return std::log(static_cast<double>(count)) / ln;
}

double gap_bound(const CountingContext& counting, std::uint32_t n) {
    const double ln = counting.length_l(n).to_double();
    const double log_ln = counting.length_l(n).log_natural();
    constexpr double kLn4 = 1.3862943611198906188;
    return (static_cast<double>(counting.m()) * n * kLn4 + log_ln) / ln;
}

EntropyReport entropy_estimate(std::uint32_t m, double tol, std::uint32_t n_cap) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be > 0");
    if (n_cap < 4) throw std::invalid_argument("cap must allow at least n = 4");
    CountingContext counting(m);
    EntropyReport report;
    report.m = m;
    report.tol = tol;
    report.n_cap = n_cap;
    report.monotone = true;

    double prev = 0;
    for (std::uint32_t n = 3; n <= n_cap; ++n) {
        EntropyRow row;
        row.n = n;
        row.l_n = counting.length_l(n).to_decimal();
        row.log_count_A = counting.log_count_A(n);
        row.h_A = h_A(counting, n);
        row.gap_bound = gap_bound(counting, n);
        if (n > 3 && row.h_A < prev) report.monotone = false;
        report.rows.push_back(std::move(row));
        report.estimate = report.rows.back().h_A;
        report.n_reached = n;
        if (n > 3 && std::fabs(report.rows.back().h_A - prev) < tol) {
            report.converged = true;
            break;
        }
        prev = report.rows.back().h_A;
    }
    return report;
}

void attach_factor_columns(EntropyReport& report, FactorTable& factors,
                           std::uint32_t max_n) {
    for (EntropyRow& row : report.rows) {
        if (row.n > max_n) break;
        try {
            row.h_F = h_F(factors, row.n);
        } catch (const BudgetExceeded&) {
            break;  // later generations only get bigger
        }
    }
}

}  // namespace randfib
