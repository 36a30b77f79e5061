// family.hpp -- the generalised random Fibonacci substitution and its sampler

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "randfib/word.hpp"

namespace randfib {

/// Family parameter m and the probability vector (p_0..p_m). Probabilities
/// must be non-negative and sum to 1 within 1e-12; anything else is rejected,
/// never silently renormalized.
struct Params {
    std::uint32_t m = 1;
    std::vector<double> p;

    Params() : p{1.0, 0.0} {}
    Params(std::uint32_t m, std::vector<double> p);

    static Params uniform(std::uint32_t m);
    /// Parses {"m": int, "p": [floats]}.
    static Params from_json(const std::string& text);
    std::string to_json() const;
};

/// SplitMix64. Stream s of seed x starts from state mix(mix(x) ^ (s+1)*GOLDEN);
/// the second mix keeps consecutive streams from being shifted copies of one
/// another, so parallel samplers draw reproducible, unaliased sequences.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t stream_index) {
        return SplitMix64(mix(mix(seed) ^ ((stream_index + 1) * kGolden)));
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += kGolden);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform draw in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t mix(std::uint64_t x) {
        x += kGolden;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    std::uint64_t state_;
};

/// The i-th image of the letter 1: i ones, a zero, then m-i ones.
Word image_of_one(std::uint32_t m, std::uint32_t i);

/// One substitution step: 0 -> 1, and every 1 -> image_of_one(m, I) with I
/// drawn independently from p. Chosen indices are appended to `choices` when
/// given.
Word substitute(const Params& params, const Word& w, SplitMix64& rng,
                std::vector<std::uint32_t>* choices = nullptr);

/// One realization r_n of the chain together with its audit trail.
struct ChainSample {
    std::uint32_t generation = 0;
    Word word;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> choices;  // one entry per substituted 1
};

/// r_1 = 0, r_2 = 1, r_k = substitute(r_{k-1}). Identical seeds give
/// identical samples; the draw at a given substitution step does not depend
/// on the target generation, so sample_chain(params, 3, seed).word is the
/// r_3 intermediate of any longer chain with the same seed.
ChainSample sample_chain(const Params& params, std::uint32_t n, std::uint64_t seed);

}  // namespace randfib
