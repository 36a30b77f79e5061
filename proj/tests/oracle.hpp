// oracle.hpp -- naive string-based reference implementations for the tests.
// Deliberately independent of the library: plain std::string words,
// std::set containers, definition-level recursions, no bit packing and no
// counting shortcuts.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Words = std::set<std::string>;

inline Words product(const Words& u, const Words& v) {
    Words out;
    for (const std::string& a : u)
        for (const std::string& b : v) out.insert(a + b);
    return out;
}

inline Words slice_set(const Words& w, std::size_t a, std::size_t b) {
    // 1-based inclusive, a == b+1 gives the empty word
    Words out;
    for (const std::string& s : w) out.insert(s.substr(a - 1, b + 1 - a));
    return out;
}

inline Words factors(const Words& s, std::size_t k) {
    Words out;
    for (const std::string& w : s)
        for (std::size_t o = 0; o + k <= w.size(); ++o) out.insert(w.substr(o, k));
    return out;
}

// A_n straight from the defining union of products.
inline Words inflated_set(std::uint32_t m, std::uint32_t n) {
    std::vector<Words> a(n + 1);
    if (n >= 1) a[1] = {"0"};
    if (n >= 2) a[2] = {"1"};
    for (std::uint32_t q = 3; q <= n; ++q) {
        for (std::uint32_t i = 0; i <= m; ++i) {
            Words term = {""};
            for (std::uint32_t j = 0; j <= m; ++j)
                term = product(term, a[q - 1 - (i == j ? 1 : 0)]);
            a[q].insert(term.begin(), term.end());
        }
    }
    return a[n];
}

// Union over i of products over j of A_{n - delta_ij}, k+1 factors each.
inline Words union_product(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
    Words out;
    for (std::uint32_t i = 0; i <= k; ++i) {
        Words term = {""};
        for (std::uint32_t j = 0; j <= k; ++j)
            term = product(term, inflated_set(m, n - (i == j ? 1 : 0)));
        out.insert(term.begin(), term.end());
    }
    return out;
}

// F(A_n^2, l_n) by literally materializing A_n^2 and scanning windows.
inline Words factor_set_F(std::uint32_t m, std::uint32_t n) {
    const Words a = inflated_set(m, n);
    const std::size_t l = a.begin()->size();
    return factors(product(a, a), l);
}

inline std::uint64_t length_l(std::uint32_t m, std::uint32_t n) {
    std::uint64_t prev = 1, cur = 1;  // l_1, l_2
    for (std::uint32_t q = 3; q <= n; ++q) {
        const std::uint64_t next = static_cast<std::uint64_t>(m) * cur + prev;
        prev = cur;
        cur = next;
    }
    return n == 1 ? 1 : cur;
}

}  // namespace oracle
