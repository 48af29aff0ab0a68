#include "eds/kmp.hpp"

#include <stdexcept>

namespace eds {

FailureFunction::FailureFunction(std::string_view pattern) {
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    const std::size_t m = pattern.size();
    table_.assign(m, 0);
    std::size_t b = 0;
    for (std::size_t i = 1; i < m; ++i) {
        while (b > 0 && pattern[b] != pattern[i]) b = table_[b - 1];
        if (pattern[b] == pattern[i]) ++b;
        table_[i] = b;
    }
}

std::size_t FailureFunction::operator()(std::size_t i) const {
    if (i < 1 || i > table_.size()) throw std::out_of_range("failure function index out of range");
    return table_[i - 1];
}

FailureFunction build_failure(std::string_view pattern) { return FailureFunction(pattern); }

std::pair<KmpState, bool> step(KmpState state, const FailureFunction& failure,
                               std::string_view pattern, char letter) {
    const std::size_t m = pattern.size();
    std::size_t q = state.matched;
    if (q == m) q = failure(m);
    while (q > 0 && pattern[q] != letter) q = failure(q);
    if (pattern[q] == letter) ++q;
    return {KmpState{q}, q == m};
}

std::vector<std::pair<std::size_t, std::size_t>> find_occurrences(std::string_view pattern,
                                                                  std::string_view text) {
    const FailureFunction failure(pattern);
    const std::size_t m = pattern.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    KmpState state;
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto [next, full] = step(state, failure, pattern, text[i]);
        state = next;
        if (full) out.emplace_back(i + 2 - m, i + 1);
    }
    return out;
}

std::vector<std::size_t> border_chain(const FailureFunction& failure, std::size_t q) {
    if (q > failure.pattern_length()) throw std::out_of_range("scan state exceeds the pattern length");
    std::vector<std::size_t> chain;
    while (q > 0) {
        chain.push_back(q);
        q = failure(q);
    }
    return chain;
}

}  // namespace eds
