#include "randfib/family.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace randfib {

Params::Params(std::uint32_t m, std::vector<double> p) : m(m), p(std::move(p)) {
    if (m < 1) throw std::invalid_argument("family parameter m must be >= 1");
    if (this->p.size() != static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("probability vector must have m+1 entries");
    double sum = 0;
    for (double v : this->p) {
        if (!(v >= 0.0)) throw std::invalid_argument("probabilities must be >= 0");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("probabilities must sum to 1 (got " +
                                    std::to_string(sum) + "); renormalize explicitly");
}

Params Params::uniform(std::uint32_t m) {
    std::vector<double> p(m + 1, 1.0 / (m + 1));
    // force an exact unit sum so validation never trips on rounding
    double sum = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) sum += p[i];
    p.back() = 1.0 - sum;
    return Params(m, std::move(p));
}

Params Params::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    return Params(j.at("m").get<std::uint32_t>(), j.at("p").get<std::vector<double>>());
}

std::string Params::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["p"] = p;
    return j.dump();
}

Word image_of_one(std::uint32_t m, std::uint32_t i) {
    if (i > m) throw std::out_of_range("image index must satisfy 0 <= i <= m");
    std::string s(m + 1, '1');
    s[i] = '0';
    return Word::from_string(s);
}

namespace {

std::uint32_t draw_index(const Params& params, SplitMix64& rng) {
    const double u = rng.next_unit();
    double acc = 0;
    for (std::uint32_t i = 0; i < params.m; ++i) {
        acc += params.p[i];
        if (u < acc) return i;
    }
    return params.m;
}

}  // namespace

Word substitute(const Params& params, const Word& w, SplitMix64& rng,
                std::vector<std::uint32_t>* choices) {
    const std::uint32_t ones = w.ones();
    const std::uint32_t zeros = w.length() - ones;
    const std::uint32_t out_len = zeros + (params.m + 1) * ones;
    std::vector<std::uint64_t> limbs(detail::limbs_for(out_len), 0u);
    std::uint32_t at = 0;
    for (std::uint32_t pos = 0; pos < w.length(); ++pos) {
        if (detail::get_letter(w.limbs().data(), pos) == 0) {
            detail::set_letter(limbs.data(), at);  // 0 -> 1
            ++at;
            continue;
        }
        const std::uint32_t i = draw_index(params, rng);
        if (choices) choices->push_back(i);
        for (std::uint32_t j = 0; j <= params.m; ++j, ++at)
            if (j != i) detail::set_letter(limbs.data(), at);
    }
    return Word::from_limbs(std::move(limbs), out_len);
}

ChainSample sample_chain(const Params& params, std::uint32_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generation index must be >= 1");
    ChainSample sample;
    sample.generation = n;
    sample.seed = seed;
    SplitMix64 rng = SplitMix64::stream(seed, 0);
    Word w = Word::from_string("0");
    for (std::uint32_t gen = 2; gen <= n; ++gen)
        w = substitute(params, w, rng, &sample.choices);
    sample.word = std::move(w);
    return sample;
}

}  // namespace randfib
