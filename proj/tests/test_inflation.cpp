#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "randfib/inflation.hpp"

using namespace randfib;

namespace {

std::set<std::string> as_set(const WordSet& w) {
    const auto v = w.to_strings();
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("small generations: frozen sets") {
    GenerationTable t1(1);
    CHECK(t1.generation(1) == WordSet::from_strings({"0"}));
    CHECK(t1.generation(2) == WordSet::from_strings({"1"}));
    CHECK(t1.generation(3) == WordSet::from_strings({"01", "10"}));
    CHECK(t1.generation(4) == WordSet::from_strings({"101", "110", "011"}));
    GenerationTable t2(2);
    CHECK(t2.generation(3) == WordSet::from_strings({"011", "101", "110"}));
}

TEST_CASE("enumeration equals the naive oracle set for set") {
    for (std::uint32_t n = 3; n <= 7; ++n)
        CHECK(as_set(build_A(1, n)) == oracle::inflated_set(1, n));
    for (std::uint32_t n = 3; n <= 4; ++n) {
        CHECK(as_set(build_A(2, n)) == oracle::inflated_set(2, n));
        CHECK(as_set(build_A(3, n)) == oracle::inflated_set(3, n));
    }
}

TEST_CASE("enumerated cardinalities match the closed form") {
    GenerationTable t1(1);
    for (std::uint32_t n = 3; n <= 8; ++n)
        CHECK(BigCount(t1.generation(n).size()) == t1.counting().count_A_closed(n));
    GenerationTable t2(2);
    for (std::uint32_t n = 3; n <= 5; ++n)
        CHECK(BigCount(t2.generation(n).size()) == t2.counting().count_A_closed(n));
}

TEST_CASE("uniform length and letter balance") {
    GenerationTable table(1);
    std::uint64_t z_prev = 0, z = 0;  // z_2 = 0
    for (std::uint32_t n = 3; n <= 8; ++n) {
        const WordSet& a = table.generation(n);
        CHECK(a.uniform_length() == table.counting().length_l_u32(n));
        z_prev = z;
        z = table.counting().length_l_u32(n - 1) - z_prev;
        (void)z_prev;
        for (std::size_t i = 0; i < a.size(); i += a.size() > 50 ? 17 : 1)
            CHECK(a.word(i).zeros() == z);
    }
}

TEST_CASE("membership") {
    GenerationTable table(1);
    CHECK(table.member(Word::from_string("101"), 4));
    CHECK(!table.member(Word::from_string("100"), 4));
    CHECK(table.member(Word::from_string("0"), 1));
    CHECK(!table.member(Word::from_string("0"), 2));
}

TEST_CASE("budget guard refuses before allocating") {
    CHECK_THROWS_AS(build_A(1, 30), BudgetExceeded);
    try {
        build_A(1, 30);
    } catch (const BudgetExceeded& e) {
        CHECK(e.budget == kDefaultBudget);
        CHECK(!e.predicted.empty());
    }
    GenerationTable tight(1, 10);
    CHECK_THROWS_AS(tight.generation(6), BudgetExceeded);  // |A_6| = 30 > 10
    CHECK_NOTHROW(tight.generation(5));                    // |A_5| = 8
    try {
        tight.generation(6);
    } catch (const BudgetExceeded& e) {
        CHECK(e.predicted == "30");
    }
    CHECK(!tight.feasible(6));
    CHECK(tight.feasible(5));
}

TEST_CASE("generation 0 is represented but unusable") {
    GenerationTable table(1);
    CHECK_THROWS_AS(table.generation(0), std::invalid_argument);
    CHECK_THROWS_AS(table.prefix_set(0, 0), std::invalid_argument);
}

TEST_CASE("prefix and suffix sets agree with materialized slices") {
    // A reference table materializes everything; the tight table is forced
    // through the recursive route.
    GenerationTable full(2);
    GenerationTable tight(2, 400);  // |A_5| = 945 over budget, intermediates fit
    for (std::uint32_t t : {1u, 2u, 3u, 7u}) {
        const WordSet direct = set_slice(full.generation(5), 1, t);
        CHECK(tight.prefix_set(5, t) == direct);
        const std::uint32_t l = full.counting().length_l_u32(5);
        const WordSet direct_suffix = set_slice(full.generation(5), l - t + 1, l);
        CHECK(tight.suffix_set(5, t) == direct_suffix);
    }
    // the general fold path: l_{n-2} < t < l_n while A_n is over budget
    for (std::uint32_t t : {8u, 12u}) {
        CHECK(tight.prefix_set(5, t) == set_slice(full.generation(5), 1, t));
        const std::uint32_t l = full.counting().length_l_u32(5);
        CHECK(tight.suffix_set(5, t) ==
              set_slice(full.generation(5), l - t + 1, l));
    }
    CHECK(tight.prefix_set(5, 0) == WordSet::epsilon());
}

TEST_CASE("superset expression B_4 for m = 1") {
    GenerationTable table(1);
    const SupersetExpr b4 = superset_B(table, 4);
    // P_3 = {0,1}{0,1}, S_2 = {0,1}{eps}: all eight length-3 words
    CHECK(b4.P == WordSet::from_strings({"00", "01", "10", "11"}));
    CHECK(b4.S == WordSet::from_strings({"0", "1"}));
    CHECK(b4.cardinality.as_u64() == 8);
    const WordSet& a4 = table.generation(4);
    for (std::size_t i = 0; i < a4.size(); ++i) CHECK(b4.contains(a4.word(i)));
    CHECK(b4.contains(Word::from_string("000")));  // B_4 is a strict superset
    CHECK(!b4.contains(Word::from_string("0000")));
    CHECK_THROWS_AS(superset_B(table, 3), std::invalid_argument);
}

TEST_CASE("superset cardinality multiplies the factor sizes") {
    GenerationTable table(2);
    const SupersetExpr b4 = superset_B(table, 4);
    CHECK(b4.cardinality ==
          BigCount(b4.P.size()) * BigCount(b4.C.size()) * BigCount(b4.S.size()));
    const WordSet& a4 = table.generation(4);
    for (std::size_t i = 0; i < a4.size(); ++i) CHECK(b4.contains(a4.word(i)));
}

TEST_CASE("memoization reuses built generations") {
    GenerationTable table(1);
    const WordSet* first = &table.generation(6);
    const WordSet* again = &table.generation(6);
    CHECK(first == again);
}
