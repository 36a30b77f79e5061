// word_set.hpp -- canonically ordered sets of equal-length binary words

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "randfib/word.hpp"

namespace randfib {

/// Deduplicated set of equal-length words in canonical (lexicographic) order.
/// The common length is carried explicitly so the empty set and {epsilon}
/// stay distinguishable. Immutable once built; cheap to share across threads.
class WordSet {
public:
    WordSet() = default;
    explicit WordSet(std::uint32_t uniform_length)
        : uniform_len_(uniform_length), limbs_(detail::limbs_for(uniform_length)) {}

    static WordSet empty(std::uint32_t uniform_length) { return WordSet(uniform_length); }

    /// {epsilon}: the multiplicative identity of set products.
    static WordSet epsilon() {
        WordSet s(0);
        s.count_ = 1;
        return s;
    }

    static WordSet singleton(const Word& w);
    static WordSet from_words(std::span<const Word> words);
    static WordSet from_strings(std::initializer_list<std::string_view> strs);

    std::uint32_t uniform_length() const { return uniform_len_; }
    std::uint32_t limbs_per_word() const { return limbs_; }
    std::size_t size() const { return count_; }
    bool is_empty() const { return count_ == 0; }

    const std::uint64_t* row(std::size_t i) const { return data_.data() + i * limbs_; }
    Word word(std::size_t i) const;
    bool contains(const Word& w) const;

    /// Newline-joined sorted words (canonical serialization).
    std::string to_lines() const;
    std::vector<std::string> to_strings() const;

    friend bool operator==(const WordSet& a, const WordSet& b) {
        return a.uniform_len_ == b.uniform_len_ && a.count_ == b.count_ && a.data_ == b.data_;
    }

    /// Accumulates rows, then sorts and deduplicates into a canonical set.
    class Builder;

private:
    friend class Builder;
    void canonicalize();

    std::uint32_t uniform_len_ = 0;
    std::uint32_t limbs_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> data_;  // row-major, canonical order
};

class WordSet::Builder {
public:
    explicit Builder(std::uint32_t uniform_length) : set_(uniform_length) {}

    void reserve(std::size_t rows) { set_.data_.reserve(rows * set_.limbs_); }
    std::size_t rows() const { return set_.count_; }

    /// Appends a packed row of limbs_per_word() limbs.
    void append_row(const std::uint64_t* row) {
        set_.data_.insert(set_.data_.end(), row, row + set_.limbs_);
        ++set_.count_;
    }
    void append_word(const Word& w);
    /// Appends the concatenation of two rows of `llen` and `rlen` letters.
    void append_concat(const std::uint64_t* left, std::uint32_t llen,
                       const std::uint64_t* right, std::uint32_t rlen);
    /// Appends letters [from, from+count) of a packed row.
    void append_slice(const std::uint64_t* src, std::size_t src_limbs,
                      std::uint32_t from, std::uint32_t count);

    /// Sorts, deduplicates and returns the canonical set.
    WordSet finish();
    /// Returns the set as-is; rows must already be canonical.
    WordSet finish_sorted();

private:
    WordSet set_;
};

/// UV = {uv : u in U, v in V}. With uniform lengths all concatenations are
/// distinct pairs-wise, so |UV| = |U||V| and u-major generation is already
/// canonical.
WordSet set_product(const WordSet& U, const WordSet& V);

/// W[a,b] = {w[a,b] : w in W}, 1-based inclusive; a == b+1 yields {epsilon}.
WordSet set_slice(const WordSet& W, std::uint32_t a, std::uint32_t b);

/// All length-k factors of members of S (every member, every offset).
WordSet factor_set(const WordSet& S, std::uint32_t k);

WordSet set_union(const WordSet& a, const WordSet& b);
WordSet set_intersection(const WordSet& a, const WordSet& b);
WordSet set_difference(const WordSet& a, const WordSet& b);

}  // namespace randfib
