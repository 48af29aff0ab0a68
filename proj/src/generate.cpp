#include "eds/generate.hpp"

#include <random>
#include <stdexcept>

namespace eds {

const std::string& generator_alphabet() {
    static const std::string letters = [] {
        std::string s;
        for (char c = 'a'; c <= 'z'; ++c) s.push_back(c);
        for (char c = 'A'; c <= 'Z'; ++c) s.push_back(c);
        for (char c = '0'; c <= '9'; ++c) s.push_back(c);
        for (int b = 0x21; b <= 0x7e; ++b) {
            const char c = static_cast<char>(b);
            if (is_permitted_letter(c) && s.find(c) == std::string::npos) s.push_back(c);
        }
        return s;
    }();
    return letters;
}

namespace {

// Engine-only sampling keeps outputs identical across standard libraries.
std::size_t sample(std::mt19937_64& rng, IntRange r) { return r.lo + rng() % (r.hi - r.lo + 1); }

bool sample_prob(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::string sample_string(std::mt19937_64& rng, std::size_t len, std::size_t sigma) {
    std::string s(len, 'a');
    for (auto& c : s) c = generator_alphabet()[rng() % sigma];
    return s;
}

void check_range(IntRange r, const char* name) {
    if (r.lo > r.hi) throw std::invalid_argument(std::string(name) + " range is empty");
}

}  // namespace

EdsText generate_random(const GeneratorParams& params, std::uint64_t rng_seed) {
    check_range(params.seed_count, "seed-count");
    check_range(params.seed_length, "seed-length");
    check_range(params.alternative_count, "alternative-count");
    check_range(params.alternative_length, "alternative-length");
    if (params.seed_count.lo < 1) throw std::invalid_argument("need at least one seed");
    if (params.alternative_count.lo < 1)
        throw std::invalid_argument("symbols need at least one alternative");
    if (params.alphabet_size < 1 || params.alphabet_size > generator_alphabet().size())
        throw std::invalid_argument("alphabet size outside [1, " +
                                    std::to_string(generator_alphabet().size()) + "]");
    if (params.empty_probability < 0.0 || params.empty_probability > 1.0)
        throw std::invalid_argument("empty probability outside [0, 1]");
    if (params.seed_count.hi >= 2 && params.alternative_count.lo == 1 &&
        params.alternative_length.hi == 0)
        throw std::invalid_argument(
            "infeasible parameters: a single-alternative symbol cannot be empty");

    std::mt19937_64 rng(rng_seed);
    const std::size_t k = sample(rng, params.seed_count);

    std::vector<std::string> seeds(k);
    for (auto& seed : seeds)
        seed = sample_string(rng, sample(rng, params.seed_length), params.alphabet_size);

    std::vector<DegenerateSymbol> symbols(k - 1);
    for (auto& sym : symbols) {
        const std::size_t count = sample(rng, params.alternative_count);
        sym.alternatives.resize(count);
        for (auto& alt : sym.alternatives) {
            std::size_t len;
            if (count == 1) {
                // singleton symbols stay non-empty so the text survives a
                // serialize/parse round trip
                IntRange r{std::max<std::size_t>(1, params.alternative_length.lo),
                           params.alternative_length.hi};
                len = sample(rng, r);
            } else if (sample_prob(rng, params.empty_probability)) {
                len = 0;
            } else {
                len = sample(rng, params.alternative_length);
            }
            alt = sample_string(rng, len, params.alphabet_size);
        }
    }
    return EdsText(std::move(seeds), std::move(symbols));
}

}  // namespace eds
