#include "randfib/word_set.hpp"

#include <algorithm>
#include <cassert>
#include <future>
#include <numeric>
#include <thread>

namespace randfib {

namespace {

// Partition [0, n) into roughly equal chunks for std::async workers.
std::vector<std::pair<std::size_t, std::size_t>> chunk_ranges(std::size_t n,
                                                              unsigned workers) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t step = (n + workers - 1) / workers;
    for (std::size_t lo = 0; lo < n; lo += step)
        out.emplace_back(lo, std::min(n, lo + step));
    return out;
}

}  // namespace

WordSet WordSet::singleton(const Word& w) {
    Builder b(w.length());
    b.append_word(w);
    return b.finish_sorted();
}

WordSet WordSet::from_words(std::span<const Word> words) {
    if (words.empty()) return WordSet(0);
    Builder b(words.front().length());
    b.reserve(words.size());
    for (const Word& w : words) b.append_word(w);
    return b.finish();
}

WordSet WordSet::from_strings(std::initializer_list<std::string_view> strs) {
    std::vector<Word> words;
    words.reserve(strs.size());
    for (std::string_view s : strs) words.push_back(Word::from_string(s));
    return from_words(words);
}

Word WordSet::word(std::size_t i) const {
    std::vector<std::uint64_t> limbs(row(i), row(i) + limbs_);
    return Word::from_limbs(std::move(limbs), uniform_len_);
}

bool WordSet::contains(const Word& w) const {
    if (w.length() != uniform_len_) return false;
    if (limbs_ == 0) return count_ > 0;  // only epsilon lives here
    std::size_t lo = 0, hi = count_;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto c = detail::compare_rows(row(mid), w.limbs().data(), limbs_);
        if (c == std::strong_ordering::equal) return true;
        if (c == std::strong_ordering::less)
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

std::string WordSet::to_lines() const {
    std::string out;
    out.reserve(count_ * (uniform_len_ + 1));
    for (std::size_t i = 0; i < count_; ++i) {
        out += word(i).str();
        out += '\n';
    }
    return out;
}

std::vector<std::string> WordSet::to_strings() const {
    std::vector<std::string> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) out.push_back(word(i).str());
    return out;
}

void WordSet::Builder::append_word(const Word& w) {
    if (w.length() != set_.uniform_len_)
        throw std::invalid_argument("word length does not match the set");
    if (set_.limbs_ == 0) {
        ++set_.count_;
        return;
    }
    append_row(w.limbs().data());
}

void WordSet::Builder::append_concat(const std::uint64_t* left, std::uint32_t llen,
                                     const std::uint64_t* right, std::uint32_t rlen) {
    assert(llen + rlen == set_.uniform_len_);
    const std::size_t at = set_.data_.size();
    set_.data_.resize(at + set_.limbs_, 0u);
    std::uint64_t* dst = set_.data_.data() + at;
    detail::copy_letters(left, detail::limbs_for(llen), 0, llen, dst, set_.limbs_, 0);
    detail::copy_letters(right, detail::limbs_for(rlen), 0, rlen, dst, set_.limbs_, llen);
    ++set_.count_;
}

void WordSet::Builder::append_slice(const std::uint64_t* src, std::size_t src_limbs,
                                    std::uint32_t from, std::uint32_t count) {
    assert(count == set_.uniform_len_);
    if (set_.limbs_ == 0) {
        ++set_.count_;
        return;
    }
    const std::size_t at = set_.data_.size();
    set_.data_.resize(at + set_.limbs_, 0u);
    detail::copy_letters(src, src_limbs, from, count, set_.data_.data() + at,
                         set_.limbs_, 0);
    ++set_.count_;
}

WordSet WordSet::Builder::finish() {
    set_.canonicalize();
    return std::move(set_);
}

WordSet WordSet::Builder::finish_sorted() {
#ifndef NDEBUG
    for (std::size_t i = 1; i < set_.count_; ++i)
        assert(detail::compare_rows(set_.row(i - 1), set_.row(i), set_.limbs_) ==
               std::strong_ordering::less);
#endif
    return std::move(set_);
}

void WordSet::canonicalize() {
    if (limbs_ == 0) {
        count_ = count_ > 0 ? 1 : 0;
        return;
    }
    if (limbs_ == 1) {
        std::sort(data_.begin(), data_.end());
        data_.erase(std::unique(data_.begin(), data_.end()), data_.end());
        count_ = data_.size();
        return;
    }
    std::vector<std::size_t> idx(count_);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return detail::compare_rows(row(a), row(b), limbs_) == std::strong_ordering::less;
    });
    std::vector<std::uint64_t> out;
    out.reserve(data_.size());
    std::size_t kept = 0;
    for (std::size_t r = 0; r < idx.size(); ++r) {
        const std::uint64_t* src = row(idx[r]);
        if (kept > 0 &&
            detail::compare_rows(out.data() + (kept - 1) * limbs_, src, limbs_) ==
                std::strong_ordering::equal)
            continue;
        out.insert(out.end(), src, src + limbs_);
        ++kept;
    }
    data_ = std::move(out);
    count_ = kept;
}

WordSet set_product(const WordSet& U, const WordSet& V) {
    const std::uint32_t len = U.uniform_length() + V.uniform_length();
    const std::size_t pairs = U.size() * V.size();
    if (!U.is_empty() && pairs / U.size() != V.size())
        throw std::length_error("set product would overflow");
    WordSet::Builder b(len);
    if (U.is_empty() || V.is_empty()) return b.finish_sorted();
    b.reserve(pairs);

    const std::uint32_t llen = U.uniform_length();
    const std::uint32_t rlen = V.uniform_length();
    const unsigned hw = std::thread::hardware_concurrency();
    if (pairs >= (1u << 20) && hw > 1 && detail::limbs_for(len) > 0) {
        // Partition over U; each worker fills a private builder, chunks are
        // concatenated in order, so the result is canonical independent of
        // the schedule.
        const auto ranges = chunk_ranges(U.size(), hw);
        std::vector<std::future<WordSet::Builder>> futs;
        for (auto [lo, hi] : ranges) {
            futs.push_back(std::async(std::launch::async, [&, lo = lo, hi = hi] {
                WordSet::Builder part(len);
                part.reserve((hi - lo) * V.size());
                for (std::size_t i = lo; i < hi; ++i)
                    for (std::size_t j = 0; j < V.size(); ++j)
                        part.append_concat(U.row(i), llen, V.row(j), rlen);
                return part;
            }));
        }
        std::vector<WordSet> parts;
        parts.reserve(futs.size());
        for (auto& f : futs) parts.push_back(f.get().finish_sorted());
        for (WordSet& p : parts)
            for (std::size_t r = 0; r < p.size(); ++r) b.append_row(p.row(r));
        return b.finish_sorted();
    }

    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = 0; j < V.size(); ++j)
            b.append_concat(U.row(i), llen, V.row(j), rlen);
    return b.finish_sorted();
}

WordSet set_slice(const WordSet& W, std::uint32_t a, std::uint32_t b) {
    if (a < 1 || a > b + 1 || b > W.uniform_length())
        throw std::out_of_range("set slice indices out of range");
    const std::uint32_t len = b + 1 - a;
    WordSet::Builder out(len);
    out.reserve(W.size());
    const std::uint32_t src_limbs = W.limbs_per_word();
    for (std::size_t i = 0; i < W.size(); ++i)
        out.append_slice(W.row(i), src_limbs, a - 1, len);
    return out.finish();
}

WordSet factor_set(const WordSet& S, std::uint32_t k) {
    if (k > S.uniform_length())
        throw std::out_of_range("factor length exceeds the word length");
    WordSet acc = WordSet::empty(k);
    for (std::uint32_t o = 0; o + k <= S.uniform_length(); ++o)
        acc = set_union(acc, set_slice(S, o + 1, o + k));
    return acc;
}

namespace {

enum class MergeKind { Union, Intersection, Difference };

WordSet merge(const WordSet& a, const WordSet& b, MergeKind kind) {
    if (a.uniform_length() != b.uniform_length())
        throw std::invalid_argument("set operands must share a uniform length");
    const std::uint32_t limbs = a.limbs_per_word();
    if (limbs == 0) {
        const bool ina = !a.is_empty(), inb = !b.is_empty();
        bool keep = kind == MergeKind::Union          ? (ina || inb)
                    : kind == MergeKind::Intersection ? (ina && inb)
                                                      : (ina && !inb);
        return keep ? WordSet::epsilon() : WordSet::empty(0);
    }
    WordSet::Builder out(a.uniform_length());
    if (kind == MergeKind::Union) out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        std::strong_ordering c = std::strong_ordering::equal;
        if (i == a.size())
            c = std::strong_ordering::greater;
        else if (j == b.size())
            c = std::strong_ordering::less;
        else
            c = detail::compare_rows(a.row(i), b.row(j), limbs);
        if (c == std::strong_ordering::less) {
            if (kind != MergeKind::Intersection) out.append_row(a.row(i));
            ++i;
        } else if (c == std::strong_ordering::greater) {
            if (kind == MergeKind::Union) out.append_row(b.row(j));
            ++j;
        } else {
            if (kind != MergeKind::Difference) out.append_row(a.row(i));
            ++i;
            ++j;
        }
    }
    return out.finish_sorted();
}

}  // namespace

WordSet set_union(const WordSet& a, const WordSet& b) {
    return merge(a, b, MergeKind::Union);
}
WordSet set_intersection(const WordSet& a, const WordSet& b) {
    return merge(a, b, MergeKind::Intersection);
}
WordSet set_difference(const WordSet& a, const WordSet& b) {
    return merge(a, b, MergeKind::Difference);
}

}  // namespace randfib
