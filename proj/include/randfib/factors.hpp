// factors.hpp -- factor sets F_n of the inflated-word language

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "randfib/inflation.hpp"
#include "randfib/word_set.hpp"

namespace randfib {

/// Outcome of comparing F(A_{n+k}, l_n) against F(A_n^2, l_n).
struct StabilizationResult {
    enum class Relation { equal, left_proper_subset, incomparable };
    Relation relation = Relation::equal;
    std::size_t lhs_size = 0;  // |F(A_{n+k}, l_n)|
    std::size_t rhs_size = 0;  // |F(A_n^2, l_n)|
    std::vector<Word> witnesses;  // up to 10 words from the set difference
};

/// Factor sets computed from a generation table. F_n is obtained by the cut
/// decomposition of A_n^2 -- the union over cuts of suffix-slice x
/// prefix-slice products -- never by materializing A_n^2 itself, whose
/// cardinality |A_n|^2 dwarfs |F_n|.
class FactorTable {
public:
    explicit FactorTable(GenerationTable& gen) : gen_(gen) {}

    GenerationTable& generations() { return gen_; }

    /// F(A_n^2, l_n), memoized. For n >= 3 this equals the language factor
    /// set F_n = F(A, l_n).
    const WordSet& factor_set_F(std::uint32_t n);
    std::size_t count_F(std::uint32_t n) { return factor_set_F(n).size(); }

    /// F(A_q, width): plain window scan over a materialized generation.
    WordSet window_scan(std::uint32_t q, std::uint32_t width);

    /// Compares F(A_{n+k}, l_n) with factor_set_F(n) and reports the
    /// relation plus witnesses rather than asserting.
    StabilizationResult stabilization_check(std::uint32_t n, std::uint32_t k);

    /// First n >= 3 with l_n >= t.
    std::uint32_t least_generation_for(std::uint32_t t) const;

    /// F(A, t): all length-t factors of the limit language, computed as
    /// F(F_n, t) for the least valid n. Checked elsewhere to be independent
    /// of which n >= n_min is used.
    WordSet factor_set_any(std::uint32_t t);

private:
    GenerationTable& gen_;
    std::map<std::uint32_t, WordSet> memo_;
};

}  // namespace randfib
