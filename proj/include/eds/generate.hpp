#pragma once

#include <cstdint>
#include <string>

#include "eds/text.hpp"

namespace eds {

// Inclusive integer range.
struct IntRange {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

struct GeneratorParams {
    IntRange seed_count{2, 6};          // k
    IntRange seed_length{0, 8};
    IntRange alternative_count{2, 4};   // per symbol
    IntRange alternative_length{1, 6};
    std::size_t alphabet_size = 4;      // first letters of the canonical alphabet
    double empty_probability = 0.0;     // chance an alternative is empty
};

// The fixed letter order the generator draws from: 'a'..'z', 'A'..'Z',
// '0'..'9', then the remaining permitted punctuation.
const std::string& generator_alphabet();

// Deterministic for a fixed rng_seed. Throws std::invalid_argument on empty
// ranges or parameter combinations that cannot yield a valid text (a
// single-alternative symbol would have to be empty).
EdsText generate_random(const GeneratorParams& params, std::uint64_t rng_seed);

}  // namespace eds
