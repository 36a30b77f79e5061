#include "randfib/inflation.hpp"


namespace randfib {

GenerationTable::GenerationTable(std::uint32_t m, std::uint64_t budget)
    : m_(m), budget_(budget), counting_(m) {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1 word");
}

bool GenerationTable::feasible(std::uint32_t n) const {
    if (n == 0) return false;
    if (n <= 2) return true;
    if (counting_.digits10_A_estimate(n) > 21.0) return false;
    try {
        return counting_.count_A_closed(n) <= BigCount(budget_);
    } catch (const DigitCapExceeded&) {
        return false;
    }
}

std::string GenerationTable::predicted_str(std::uint32_t n) const {
    if (n <= 2) return "1";
    const double digits = counting_.digits10_A_estimate(n);
    if (digits > 30.0) {
        return "~10^" + std::to_string(static_cast<std::uint64_t>(digits));
    }
    try {
        return counting_.count_A_closed(n).to_decimal();
    } catch (const DigitCapExceeded& e) {
        return "~10^" + std::to_string(static_cast<std::uint64_t>(e.digits_estimate));
    }
}

const WordSet& GenerationTable::generation(std::uint32_t n) {
    if (n == 0)
        throw std::invalid_argument("A_0 is empty and unusable as a product factor");
    if (sets_.size() <= n) sets_.resize(n + 1);
    if (!sets_[n]) {
        if (!feasible(n))
            throw BudgetExceeded("predicted |A_" + std::to_string(n) +
                                     "| exceeds the enumeration budget",
                                 predicted_str(n), budget_);
        build(n);
    }
    return *sets_[n];
}

const WordSet& GenerationTable::build(std::uint32_t n) {
    if (!sets_[n]) {
        if (n == 1) {
            sets_[n] = std::make_unique<WordSet>(WordSet::from_strings({"0"}));
        } else if (n == 2) {
            sets_[n] = std::make_unique<WordSet>(WordSet::from_strings({"1"}));
        } else {
            const WordSet& lower = generation(n - 2);
            const WordSet& upper = generation(n - 1);
            WordSet acc = WordSet::empty(counting_.length_l_u32(n));
            for (std::uint32_t i = 0; i <= m_; ++i) {
                // product over j of A_{n-1-delta_ij}: position i drops a
                // generation
                WordSet term = WordSet::epsilon();
                for (std::uint32_t j = 0; j <= m_; ++j)
                    term = set_product(term, j == i ? lower : upper);
                acc = set_union(acc, term);
            }
            sets_[n] = std::make_unique<WordSet>(std::move(acc));
        }
    }
    return *sets_[n];
}

WordSet GenerationTable::prefix_set(std::uint32_t n, std::uint32_t t) {
    if (n == 0) throw std::invalid_argument("A_0 has no prefixes");
    const BigCount ln = counting_.length_l(n);
    if (BigCount(t) > ln) throw std::out_of_range("prefix longer than l_n");
    if (t == 0) return WordSet::epsilon();
    if ((sets_.size() > n && sets_[n]) || feasible(n))
        return set_slice(generation(n), 1, t);
    if (n >= 3 && BigCount(t) <= counting_.length_l(n - 2))
        return set_union(prefix_set(n - 1, t), prefix_set(n - 2, t));
    // General fold: walk the factors of each union term from the left,
    // taking whole factors while they fit and a recursive prefix for the
    // remainder.
    WordSet acc = WordSet::empty(t);
    for (std::uint32_t i = 0; i <= m_; ++i) {
        WordSet cur = WordSet::epsilon();
        std::uint32_t remaining = t;
        for (std::uint32_t j = 0; j <= m_ && remaining > 0; ++j) {
            const std::uint32_t fgen = n - 1 - (i == j ? 1 : 0);
            const std::uint32_t flen = counting_.length_l_u32(fgen);
            const WordSet piece = remaining >= flen ? generation(fgen)
                                                    : prefix_set(fgen, remaining);
            if (!cur.is_empty() && piece.size() > 0 &&
                cur.size() > budget_ / piece.size())
                throw BudgetExceeded("prefix-set product exceeds the budget",
                                     predicted_str(n), budget_);
            cur = set_product(cur, piece);
            remaining -= piece.uniform_length();
        }
        acc = set_union(acc, cur);
    }
    return acc;
}

WordSet GenerationTable::suffix_set(std::uint32_t n, std::uint32_t t) {
    if (n == 0) throw std::invalid_argument("A_0 has no suffixes");
    const BigCount ln = counting_.length_l(n);
    if (BigCount(t) > ln) throw std::out_of_range("suffix longer than l_n");
    if (t == 0) return WordSet::epsilon();
    if ((sets_.size() > n && sets_[n]) || feasible(n)) {
        const std::uint32_t l = counting_.length_l_u32(n);
        return set_slice(generation(n), l - t + 1, l);
    }
    if (n >= 3 && BigCount(t) <= counting_.length_l(n - 2))
        return set_union(suffix_set(n - 1, t), suffix_set(n - 2, t));
    WordSet acc = WordSet::empty(t);
    for (std::uint32_t i = 0; i <= m_; ++i) {
        WordSet cur = WordSet::epsilon();
        std::uint32_t remaining = t;
        for (std::uint32_t jj = 0; jj <= m_ && remaining > 0; ++jj) {
            const std::uint32_t j = m_ - jj;  // rightmost factor first
            const std::uint32_t fgen = n - 1 - (i == j ? 1 : 0);
            const std::uint32_t flen = counting_.length_l_u32(fgen);
            const WordSet piece = remaining >= flen ? generation(fgen)
                                                    : suffix_set(fgen, remaining);
            if (!cur.is_empty() && piece.size() > 0 &&
                cur.size() > budget_ / piece.size())
                throw BudgetExceeded("suffix-set product exceeds the budget",
                                     predicted_str(n), budget_);
            cur = set_product(piece, cur);
            remaining -= piece.uniform_length();
        }
        acc = set_union(acc, cur);
    }
    return acc;
}

WordSet build_A(std::uint32_t m, std::uint32_t n, std::uint64_t budget) {
    GenerationTable table(m, budget);
    return table.generation(n);
}

bool SupersetExpr::contains(const Word& w) const {
    const std::uint32_t lp = P.uniform_length();
    const std::uint32_t lc = C.uniform_length();
    const std::uint32_t ls = S.uniform_length();
    if (w.length() != lp + (m - 1) * lc + ls) return false;
    std::uint32_t at = 1;
    if (!P.contains(slice(w, at, at + lp - 1))) return false;
    at += lp;
    for (std::uint32_t r = 0; r + 1 < m; ++r, at += lc)
        if (!C.contains(slice(w, at, at + lc - 1))) return false;
    return S.contains(slice(w, at, at + ls - 1));
}

SupersetExpr superset_B(GenerationTable& table, std::uint32_t n) {
    if (n < 4) throw std::invalid_argument("the superset construction needs n >= 4");
    const std::uint32_t m = table.m();
    const WordSet binary = WordSet::from_strings({"0", "1"});
    const WordSet& a1 = table.generation(n - 1);
    const WordSet& a2 = table.generation(n - 2);
    const std::uint32_t l1 = table.counting().length_l_u32(n - 1);
    const std::uint32_t l2 = table.counting().length_l_u32(n - 2);

    SupersetExpr expr;
    expr.m = m;
    expr.n = n;
    expr.P = set_product(set_slice(a1, 1, l1 - 1), binary);
    expr.C = set_product(set_product(binary, set_slice(a1, 2, l1 - 1)), binary);
    expr.S = set_product(binary, set_slice(a2, 2, l2));
    expr.cardinality = BigCount(expr.P.size()) *
                       BigCount::pow(BigCount(expr.C.size()), m - 1) *
                       BigCount(expr.S.size());
    return expr;
}

}  // namespace randfib
