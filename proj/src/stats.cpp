#include "randfib/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace randfib {

namespace {

// Series expansion, converges well for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x), good for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (a <= 0 || x < 0) throw std::domain_error("gamma_p needs a > 0, x >= 0");
    if (x == 0) return 0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double chi_square_cdf(double x, std::uint32_t df) {
    if (df == 0) throw std::domain_error("chi-square needs df >= 1");
    if (x <= 0) return 0;
    return regularized_gamma_p(df / 2.0, x / 2.0);
}

ChiSquareOutcome chi_square_test(const std::vector<std::uint64_t>& observed,
                                 const std::vector<double>& probabilities,
                                 double significance) {
    if (observed.size() != probabilities.size())
        throw std::invalid_argument("cell count mismatch");
    ChiSquareOutcome out;
    std::uint64_t total = 0;
    for (std::uint64_t o : observed) total += o;
    double stat = 0;
    std::uint32_t cells = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (probabilities[i] == 0.0) {
            if (observed[i] > 0) {  // impossible outcome observed
                out.applicable = true;
                out.rejected = true;
                out.statistic = std::numeric_limits<double>::infinity();
                out.cdf = 1.0;
                out.df = 1;
                return out;
            }
            continue;
        }
        const double expected = probabilities[i] * static_cast<double>(total);
        if (expected < 5.0) return out;  // not applicable
        const double diff = static_cast<double>(observed[i]) - expected;
        stat += diff * diff / expected;
        ++cells;
    }
    if (cells < 2) return out;  // a single live cell has no degrees of freedom
    out.applicable = true;
    out.df = cells - 1;
    out.statistic = stat;
    out.cdf = chi_square_cdf(stat, out.df);
    const double half = significance / 2.0;
    out.rejected = out.cdf > 1.0 - half || out.cdf < half;
    return out;
}

}  // namespace randfib
