#pragma once

// Brute-force reference implementations for property tests. Everything here
// is a direct transcription of a definition; no shortcuts, no sharing with
// the library code under test.

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brute {

// Longest proper border of p[0..i): the longest b < i with
// p[0..b) == p[i-b..i).
inline std::size_t longest_border(std::string_view p, std::size_t i) {
    for (std::size_t b = i - 1; b > 0; --b)
        if (p.substr(0, b) == p.substr(i - b, b)) return b;
    return 0;
}

// Every alignment of pattern in text, 1-based inclusive.
inline std::vector<std::pair<std::size_t, std::size_t>> find_all(std::string_view pattern,
                                                                 std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (pattern.empty() || text.size() < pattern.size()) return out;
    for (std::size_t s = 0; s + pattern.size() <= text.size(); ++s)
        if (text.substr(s, pattern.size()) == pattern) out.emplace_back(s + 1, s + pattern.size());
    return out;
}

// Longest common prefix of a[i..] and b[j..], 1-based positions up to one
// past the end.
inline std::size_t lce(std::string_view a, std::size_t i, std::string_view b, std::size_t j) {
    std::size_t len = 0;
    while (i - 1 + len < a.size() && j - 1 + len < b.size() && a[i - 1 + len] == b[j - 1 + len]) ++len;
    return len;
}

// { b >= 1 : pattern[0..b) is a suffix of w }
inline std::set<std::size_t> prefix_suffix_set(std::string_view pattern, std::string_view w) {
    std::set<std::size_t> out;
    for (std::size_t b = 1; b <= std::min(pattern.size(), w.size()); ++b)
        if (pattern.substr(0, b) == w.substr(w.size() - b, b)) out.insert(b);
    return out;
}

struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::size_t below(std::size_t n) { return engine() % n; }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

    std::string letters(std::size_t len, std::size_t sigma) {
        std::string s(len, 'a');
        for (auto& c : s) c = static_cast<char>('a' + below(sigma));
        return s;
    }
};

}  // namespace brute
