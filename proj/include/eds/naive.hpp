#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eds/text.hpp"

namespace eds {

// One solid string realizable from a text, with the 1-based text position of
// every letter: seed letters carry their solid position, alternative letters
// all carry the symbol's single degenerate position.
struct ExpandedString {
    std::string letters;
    std::vector<std::size_t> coord_map;
};

// The possibility set grows as the product of the alternative counts, so
// expansion is capped both in string count and in total letters.
struct ExpansionBudget {
    std::uint64_t max_strings = 10'000;
    std::uint64_t max_total_letters = 10'000'000;
};

class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& message, std::uint64_t computed);
    std::uint64_t computed() const { return computed_; }

private:
    std::uint64_t computed_;
};

// Every realizable solid string, one per choice of alternatives, duplicates
// retained. Throws BudgetError when the budget is exceeded.
std::vector<ExpandedString> expand_possibility_set(const EdsText& text,
                                                   const ExpansionBudget& budget = {});

// Brute-force reference: expands the possibility set, scans every alignment
// of the pattern in every expansion, and maps the endpoints back to text
// positions. Deduplicated and sorted. Deliberately simple; correctness is
// its only job.
std::vector<Occurrence> naive_occurrences(std::string_view pattern, const EdsText& text,
                                          const ExpansionBudget& budget = {});

}  // namespace eds
