// inflation.hpp -- exact enumeration of the inflated-word sets A_n

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "randfib/counting.hpp"
#include "randfib/word_set.hpp"

namespace randfib {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 25;

/// Refusal to enumerate past the word budget. Carries the predicted
/// cardinality (decimal, or an order-of-magnitude string when even the exact
/// count is out of reach).
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what, std::string predicted, std::uint64_t budget)
        : std::runtime_error(std::move(what)),
          predicted(std::move(predicted)),
          budget(budget) {}
    std::string predicted;
    std::uint64_t budget;
};

/// Bottom-up memoized table of the sets A_n for one family parameter m.
/// A_1 = {0}, A_2 = {1}, and A_n is the union over i of the products with
/// the (i-th) factor dropped one generation. The closed-form cardinality is
/// consulted before any generation is materialized. Built generations are
/// immutable.
class GenerationTable {
public:
    explicit GenerationTable(std::uint32_t m, std::uint64_t budget = kDefaultBudget);

    std::uint32_t m() const { return m_; }
    std::uint64_t budget() const { return budget_; }
    const CountingContext& counting() const { return counting_; }

    /// Predicted |A_n| <= budget?
    bool feasible(std::uint32_t n) const;
    /// Human-readable predicted |A_n| for refusal messages.
    std::string predicted_str(std::uint32_t n) const;

    /// A_n, built (and memoized) on demand. Throws BudgetExceeded when the
    /// predicted cardinality is over budget and std::invalid_argument for
    /// n = 0 (A_0 is the empty set and never usable as a product factor).
    const WordSet& generation(std::uint32_t n);

    bool member(const Word& w, std::uint32_t n) { return generation(n).contains(w); }

    /// A_n[1, t] without materializing A_n when a cheaper route exists: for
    /// t <= l_{n-2} every term of the defining union starts with a full
    /// A_{n-1} or A_{n-2} factor, so the prefix set is the union of theirs.
    WordSet prefix_set(std::uint32_t n, std::uint32_t t);
    /// The mirror image: the set of length-t suffixes of A_n.
    WordSet suffix_set(std::uint32_t n, std::uint32_t t);

private:
    const WordSet& build(std::uint32_t n);

    std::uint32_t m_;
    std::uint64_t budget_;
    CountingContext counting_;
    // unique_ptr keeps built generations at stable addresses while the
    // index grows, so returned references survive later builds
    std::vector<std::unique_ptr<WordSet>> sets_;
};

/// Convenience wrapper: enumerate A_n from scratch.
WordSet build_A(std::uint32_t m, std::uint32_t n, std::uint64_t budget = kDefaultBudget);

/// The superset B_n = P_{n-1} C_{n-1}^{m-1} S_{n-2} of A_n (n >= 4), kept as
/// the three factor sets. Membership and the exact cardinality
/// |P| |C|^{m-1} |S| never materialize the product (fixed chunk widths make
/// the product collision-free).
struct SupersetExpr {
    std::uint32_t m = 0;
    std::uint32_t n = 0;
    WordSet P, C, S;
    BigCount cardinality;

    bool contains(const Word& w) const;
};

SupersetExpr superset_B(GenerationTable& table, std::uint32_t n);

}  // namespace randfib
