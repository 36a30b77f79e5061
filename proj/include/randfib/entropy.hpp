// entropy.hpp -- entropy sequences h_A, h_F, the gap bound and the estimate

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randfib/counting.hpp"
#include "randfib/factors.hpp"

namespace randfib {

/// h_A(n) = log|A_n| / l_n, natural log. Each term pairs ln(m(n-i)+1) with
/// the exact big-integer ratio d_{i-1}/l_n, so the sum never overflows even
/// when d_i is far past the double range.
double h_A(const CountingContext& counting, std::uint32_t n);

/// h_F(n) = log|F_n| / l_n; needs F_n to be enumerable.
double h_F(FactorTable& factors, std::uint32_t n);

/// (m n ln 4 + ln l_n) / l_n, the width of the sandwich around h_A.
double gap_bound(const CountingContext& counting, std::uint32_t n);

struct EntropyRow {
    std::uint32_t n = 0;
    std::string l_n;  // exact decimal
    double log_count_A = 0;
    double h_A = 0;
    std::optional<double> h_F;
    double gap_bound = 0;
};

struct EntropyReport {
    std::uint32_t m = 0;
    double tol = 0;
    std::uint32_t n_cap = 0;
    std::vector<EntropyRow> rows;  // n = 3 .. n_reached
    double estimate = 0;
    std::uint32_t n_reached = 0;
    bool converged = false;
    /// True when h_A was non-decreasing over every computed row.
    bool monotone = false;
};

/// Iterates h_A(n) until successive differences drop below tol or n hits the
/// cap. Deterministic; depends on m only -- topological entropy never reads
/// the probability vector.
EntropyReport entropy_estimate(std::uint32_t m, double tol, std::uint32_t n_cap = 200);

/// Fills the h_F column for rows with n <= max_n where F_n is enumerable.
void attach_factor_columns(EntropyReport& report, FactorTable& factors,
                           std::uint32_t max_n);

}  // namespace randfib
