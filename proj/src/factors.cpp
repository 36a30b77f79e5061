#include "randfib/factors.hpp"

namespace randfib {

const WordSet& FactorTable::factor_set_F(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("factor sets start at n = 2");
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;

    const WordSet& a = gen_.generation(n);
    const std::uint32_t l = gen_.counting().length_l_u32(n);
    // Every length-l_n window of A_n^2 splits at some cut 0 <= c < l_n into
    // a suffix slice and a prefix slice of A_n.
    std::vector<WordSet> suffixes(l), prefixes(l);
    std::uint64_t candidates = 0;
    for (std::uint32_t c = 0; c < l; ++c) {
        suffixes[c] = set_slice(a, c + 1, l);
        prefixes[c] = set_slice(a, 1, c);
        candidates += static_cast<std::uint64_t>(suffixes[c].size()) *
                      prefixes[c].size();
        if (candidates > gen_.budget())
            throw BudgetExceeded("cut decomposition of F_" + std::to_string(n) +
                                     " exceeds the budget",
                                 std::to_string(candidates), gen_.budget());
    }
    WordSet acc = WordSet::empty(l);
    for (std::uint32_t c = 0; c < l; ++c)
        acc = set_union(acc, set_product(suffixes[c], prefixes[c]));
    return memo_.emplace(n, std::move(acc)).first->second;
}

WordSet FactorTable::window_scan(std::uint32_t q, std::uint32_t width) {
    const WordSet& a = gen_.generation(q);
    return factor_set(a, width);
}

StabilizationResult FactorTable::stabilization_check(std::uint32_t n, std::uint32_t k) {
    if (n < 2 || k < 1) throw std::invalid_argument("stabilization needs n >= 2, k >= 1");
    const std::uint32_t l = gen_.counting().length_l_u32(n);
    const WordSet lhs = window_scan(n + k, l);
    const WordSet& rhs = factor_set_F(n);

    StabilizationResult res;
    res.lhs_size = lhs.size();
    res.rhs_size = rhs.size();
    const WordSet lhs_only = set_difference(lhs, rhs);
    const WordSet rhs_only = set_difference(rhs, lhs);
    if (lhs_only.is_empty() && rhs_only.is_empty()) {
        res.relation = StabilizationResult::Relation::equal;
        return res;
    }
    res.relation = lhs_only.is_empty() ? StabilizationResult::Relation::left_proper_subset
                                       : StabilizationResult::Relation::incomparable;
    for (const WordSet* diff : {&rhs_only, &lhs_only})
        for (std::size_t i = 0; i < diff->size() && res.witnesses.size() < 10; ++i)
            res.witnesses.push_back(diff->word(i));
    return res;
}

std::uint32_t FactorTable::least_generation_for(std::uint32_t t) const {
    std::uint32_t n = 3;
    while (gen_.counting().length_l(n) < BigCount(t)) ++n;
    return n;
}

WordSet FactorTable::factor_set_any(std::uint32_t t) {
    if (t == 0) return WordSet::epsilon();
    const std::uint32_t n = least_generation_for(t);
    return factor_set(factor_set_F(n), t);
}

}  // namespace randfib
