// verify.hpp -- brute-force verification harness for the set identities

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "randfib/factors.hpp"
#include "randfib/family.hpp"
#include "randfib/inflation.hpp"

namespace randfib {

enum class CheckKind {
    overlap,           // (A_n U) int (U A_n) == A_n U' A_n
    union_product,     // |union of products| == counting formula
    prefix_stability,  // A_n[1, l_n-1] == A_{n+k}[1, l_n-1], plus suffix mirror
    superset,          // A_n subset of B_n
    split_bound,       // |A_n[1,k]| |A_n[k+1,l_n]| <= 4^{mn} |A_n|
    factor_bound,      // |F_n| <= 4^{mn} l_n |A_n|
    stabilization,     // F(A_{n+k}, l_n) vs F(A_n^2, l_n)
    sampler,           // samples land in A_n; r_3 distribution chi-square
};

const char* to_string(CheckKind kind);

struct GridPoint {
    std::uint32_t m = 1;
    std::uint32_t n = 0;
    std::uint32_t k = 0;  // unused for superset / split_bound / factor_bound
};

struct CheckSpec {
    CheckKind kind;
    std::vector<GridPoint> points;
};

enum class PointStatus { pass, fail, expected_exception, skipped_over_budget };

const char* to_string(PointStatus status);

/// Result of one grid point. Failures always carry a concrete witness word
/// or the exact cardinality pair in `detail`.
struct PointOutcome {
    GridPoint point;
    PointStatus status = PointStatus::pass;
    std::string detail;
    std::vector<std::string> witnesses;
    double seconds = 0;
};

struct CheckResult {
    CheckKind kind;
    std::vector<PointOutcome> outcomes;
};

struct SuiteConfig {
    std::vector<CheckSpec> checks;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 20240807;
    std::uint32_t trials = 10000;
    double significance = 0.001;
};

/// The default grid: m in {1,2,3}, n up to the budget-feasible frontier per
/// m, k in {1,2,3} where applicable. The single expected exception is the
/// stabilization point (m=1, n=3, k=1).
SuiteConfig default_config();

struct SuiteReport {
    std::vector<CheckResult> results;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t expected_exceptions = 0;
    std::size_t skipped = 0;
    bool ok() const { return failed == 0; }
};

SuiteReport run_suite(const SuiteConfig& config);

std::string to_json(const SuiteReport& report, bool include_timings = false);
std::string to_table(const SuiteReport& report);

// Individual checks; each reports rather than throws, except for budget
// refusals which the suite runner translates into skipped points.
PointOutcome verify_overlap(GenerationTable& table, std::uint32_t n, std::uint32_t k);
PointOutcome verify_union_product(GenerationTable& table, std::uint32_t n,
                                  std::uint32_t k);
PointOutcome verify_prefix_stability(GenerationTable& table, std::uint32_t n,
                                     std::uint32_t k);
PointOutcome verify_superset(GenerationTable& table, std::uint32_t n);
PointOutcome verify_split_bound(GenerationTable& table, std::uint32_t n);
PointOutcome verify_factor_bound(FactorTable& factors, std::uint32_t n);
PointOutcome verify_stabilization(FactorTable& factors, std::uint32_t n,
                                  std::uint32_t k);
PointOutcome verify_sampler(GenerationTable& table, const Params& params,
                            std::uint32_t n, std::uint32_t trials,
                            std::uint64_t seed, double significance);

/// The union of (k+1)-factor products at level n, materialized. Shared by
/// the overlap and union-product checks.
WordSet enumerate_union_product(GenerationTable& table, std::uint32_t n,
                                std::uint32_t k);

}  // namespace randfib
