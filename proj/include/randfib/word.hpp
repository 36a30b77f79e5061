// word.hpp -- bit-packed binary words with 1-based inclusive slicing

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace randfib {

namespace detail {

inline std::uint32_t limbs_for(std::uint32_t letters) {
    return (letters + 63u) / 64u;
}

// Letters o..o+63 of a limb array, zero-padded past the end. Letters are
// packed most-significant-bit first: letter p lives at bit 63-(p&63) of
// limb p>>6.
inline std::uint64_t read_window(const std::uint64_t* src, std::size_t nlimbs,
                                 std::uint32_t o) {
    const std::size_t q = o >> 6;
    const unsigned s = o & 63u;
    const std::uint64_t hi = q < nlimbs ? src[q] : 0u;
    if (s == 0) return hi;
    const std::uint64_t lo = (q + 1) < nlimbs ? src[q + 1] : 0u;
    return (hi << s) | (lo >> (64 - s));
}

// OR the top `count` letters of window w into dst at letter offset o.
// Target bits must be zero beforehand.
inline void write_window(std::uint64_t* dst, std::size_t nlimbs, std::uint32_t o,
                         std::uint64_t w, std::uint32_t count) {
    if (count == 0) return;
    if (count < 64) w &= ~std::uint64_t{0} << (64 - count);
    const std::size_t q = o >> 6;
    const unsigned s = o & 63u;
    dst[q] |= s ? (w >> s) : w;
    if (s != 0 && s + count > 64 && q + 1 < nlimbs) dst[q + 1] |= w << (64 - s);
}

// Copy `count` letters starting at src letter `from` (0-based) into dst at
// letter offset `at`.
inline void copy_letters(const std::uint64_t* src, std::size_t src_limbs,
                         std::uint32_t from, std::uint32_t count,
                         std::uint64_t* dst, std::size_t dst_limbs,
                         std::uint32_t at) {
    for (std::uint32_t t = 0; t < count; t += 64) {
        const std::uint32_t take = count - t < 64 ? count - t : 64;
        const std::uint64_t w = read_window(src, src_limbs, from + t);
        write_window(dst, dst_limbs, at + t, w, take);
    }
}

inline int get_letter(const std::uint64_t* src, std::uint32_t p) {
    return static_cast<int>((src[p >> 6] >> (63 - (p & 63u))) & 1u);
}

inline void set_letter(std::uint64_t* dst, std::uint32_t p) {
    dst[p >> 6] |= std::uint64_t{1} << (63 - (p & 63u));
}

// Lexicographic comparison of two equal-length rows. With MSB-first packing
// this is plain limb order.
inline std::strong_ordering compare_rows(const std::uint64_t* a,
                                         const std::uint64_t* b,
                                         std::uint32_t limbs) {
    for (std::uint32_t i = 0; i < limbs; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

}  // namespace detail

/// Immutable binary word over {0,1}. The empty word is a valid value.
/// Letters are packed MSB-first so equal-length words compare
/// lexicographically as limb sequences.
class Word {
public:
    Word() = default;

    /// Parses a string of '0'/'1' characters.
    static Word from_string(std::string_view s) {
        Word w;
        w.len_ = static_cast<std::uint32_t>(s.size());
        w.limbs_.assign(detail::limbs_for(w.len_), 0u);
        for (std::uint32_t i = 0; i < w.len_; ++i) {
            const char c = s[i];
            if (c == '1')
                detail::set_letter(w.limbs_.data(), i);
            else if (c != '0')
                throw std::invalid_argument("word letters must be '0' or '1'");
        }
        return w;
    }

    /// Wraps a pre-packed limb vector; bits past `length` must be zero.
    static Word from_limbs(std::vector<std::uint64_t> limbs, std::uint32_t length) {
        if (limbs.size() != detail::limbs_for(length))
            throw std::invalid_argument("limb count does not match length");
        if (length % 64 != 0 && !limbs.empty()) {
            const std::uint64_t tail_mask = ~std::uint64_t{0} >> (length % 64);
            if (limbs.back() & tail_mask)
                throw std::invalid_argument("stray bits past the word length");
        }
        Word w;
        w.len_ = length;
        w.limbs_ = std::move(limbs);
        return w;
    }

    std::uint32_t length() const { return len_; }
    bool empty() const { return len_ == 0; }

    /// Letter at 1-based position i.
    int letter(std::uint32_t i) const {
        if (i < 1 || i > len_) throw std::out_of_range("letter index out of range");
        return detail::get_letter(limbs_.data(), i - 1);
    }

    std::uint32_t ones() const {
        std::uint32_t c = 0;
        for (std::uint64_t l : limbs_) c += static_cast<std::uint32_t>(__builtin_popcountll(l));
        return c;
    }
    std::uint32_t zeros() const { return len_ - ones(); }

    std::string str() const {
        std::string s(len_, '0');
        for (std::uint32_t i = 0; i < len_; ++i)
            if (detail::get_letter(limbs_.data(), i)) s[i] = '1';
        return s;
    }

    std::span<const std::uint64_t> limbs() const { return limbs_; }

    friend bool operator==(const Word& a, const Word& b) {
        return a.len_ == b.len_ && a.limbs_ == b.limbs_;
    }

    /// Lexicographic order; on a shared prefix the shorter word sorts first.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        const std::uint32_t common = detail::limbs_for(a.len_ < b.len_ ? a.len_ : b.len_);
        const auto c = detail::compare_rows(a.limbs_.data(), b.limbs_.data(), common);
        if (c != std::strong_ordering::equal) return c;
        return a.len_ <=> b.len_;
    }

private:
    std::uint32_t len_ = 0;
    std::vector<std::uint64_t> limbs_;
};

/// uv: letters of u followed by letters of v.
inline Word concat(const Word& u, const Word& v) {
    const std::uint32_t len = u.length() + v.length();
    std::vector<std::uint64_t> limbs(detail::limbs_for(len), 0u);
    if (!u.limbs().empty())
        std::copy(u.limbs().begin(), u.limbs().end(), limbs.begin());
    detail::copy_letters(v.limbs().data(), v.limbs().size(), 0, v.length(),
                         limbs.data(), limbs.size(), u.length());
    return Word::from_limbs(std::move(limbs), len);
}

/// w[a,b], 1-based inclusive. a == b+1 yields the empty word.
inline Word slice(const Word& w, std::uint32_t a, std::uint32_t b) {
    if (a < 1 || a > b + 1 || b > w.length())
        throw std::out_of_range("slice indices out of range");
    const std::uint32_t len = b + 1 - a;
    std::vector<std::uint64_t> limbs(detail::limbs_for(len), 0u);
    detail::copy_letters(w.limbs().data(), w.limbs().size(), a - 1, len,
                         limbs.data(), limbs.size(), 0);
    return Word::from_limbs(std::move(limbs), len);
}

}  // namespace randfib
