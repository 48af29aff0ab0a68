#include "eds/naive.hpp"

#include <set>

namespace eds {

BudgetError::BudgetError(const std::string& message, std::uint64_t computed)
    : std::runtime_error(message), computed_(computed) {}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

}  // namespace

std::vector<ExpandedString> expand_possibility_set(const EdsText& text, const ExpansionBudget& budget) {
    std::uint64_t product = 1;
    for (const auto& sym : text.symbols()) product = saturating_mul(product, sym.alternatives.size());
    if (product > budget.max_strings)
        throw BudgetError("possibility-set size " + std::to_string(product) + " exceeds the budget of " +
                              std::to_string(budget.max_strings) + " strings",
                          product);

    const std::size_t k = text.seed_count();
    std::vector<std::size_t> choice(text.symbol_count(), 0);
    std::vector<ExpandedString> out;
    out.reserve(static_cast<std::size_t>(product));
    std::uint64_t total_letters = 0;

    while (true) {
        ExpandedString exp;
        for (std::size_t i = 0; i < k; ++i) {
            const std::string& seed = text.seeds()[i];
            for (std::size_t j = 0; j < seed.size(); ++j) {
                exp.letters.push_back(seed[j]);
                exp.coord_map.push_back(text.seed_start(i) + j);
            }
            if (i < text.symbol_count()) {
                const std::string& alt = text.symbols()[i].alternatives[choice[i]];
                for (char ch : alt) {
                    exp.letters.push_back(ch);
                    exp.coord_map.push_back(text.symbol_position(i));
                }
            }
        }
        total_letters += exp.letters.size();
        if (total_letters > budget.max_total_letters)
            throw BudgetError("expanded volume exceeds the budget of " +
                                  std::to_string(budget.max_total_letters) + " letters",
                              total_letters);
        out.push_back(std::move(exp));

        // odometer over the choices, rightmost symbol fastest
        std::size_t i = choice.size();
        while (i > 0) {
            --i;
            if (++choice[i] < text.symbols()[i].alternatives.size()) break;
            choice[i] = 0;
            if (i == 0) return out;
        }
        if (choice.empty()) return out;
    }
}

std::vector<Occurrence> naive_occurrences(std::string_view pattern, const EdsText& text,
                                          const ExpansionBudget& budget) {
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    const std::size_t m = pattern.size();
    std::set<Occurrence> found;
    for (const ExpandedString& exp : expand_possibility_set(text, budget)) {
        if (exp.letters.size() < m) continue;
        for (std::size_t start = 0; start + m <= exp.letters.size(); ++start) {
            bool match = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (exp.letters[start + j] != pattern[j]) {
                    match = false;
                    break;
                }
            }
            if (match) found.insert(Occurrence{exp.coord_map[start], exp.coord_map[start + m - 1]});
        }
    }
    return std::vector<Occurrence>(found.begin(), found.end());
}

}  // namespace eds
