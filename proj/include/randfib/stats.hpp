// stats.hpp -- chi-square goodness-of-fit helpers for the sampler checks

#pragma once

#include <cstdint>
#include <vector>

namespace randfib {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// CDF of the chi-square distribution with df degrees of freedom.
double chi_square_cdf(double x, std::uint32_t df);

struct ChiSquareOutcome {
    bool applicable = false;  // false when an expected cell count is < 5
    bool rejected = false;    // two-sided test at the given significance
    double statistic = 0;
    double cdf = 0;  // CDF of the statistic under the null
    std::uint32_t df = 0;
};

/// Two-sided chi-square goodness-of-fit test of observed counts against the
/// given cell probabilities. Cells with zero probability are excluded from
/// the statistic; the test is marked not applicable when any included
/// expected count is below 5.
ChiSquareOutcome chi_square_test(const std::vector<std::uint64_t>& observed,
                                 const std::vector<double>& probabilities,
                                 double significance);

}  // namespace randfib
