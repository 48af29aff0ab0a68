#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eds {

// Longest-common-extension queries between suffixes of one pattern and
// suffixes of a set of reference strings. Internally a suffix array with an
// LCP array and a sparse range-minimum table over a concatenation joined by
// per-string unique separators: build is O(L log L) for L = m + total ref
// letters, queries are O(1). Immutable after build; concurrent queries are
// safe.
class LceOracle {
public:
    LceOracle(std::string pattern, std::vector<std::string> refs);

    // Length of the longest common prefix of P[pattern_pos..m] and
    // ref[ref_pos..]. pattern_pos ranges over [1, m+1] and ref_pos over
    // [1, |ref|+1]; the one-past-the-end values denote empty suffixes.
    std::size_t lce(std::size_t pattern_pos, std::size_t ref_id, std::size_t ref_pos) const;

    const std::string& pattern() const { return pattern_; }
    std::size_t pattern_length() const { return pattern_.size(); }
    std::size_t ref_count() const { return refs_.size(); }
    const std::string& ref(std::size_t ref_id) const;

private:
    std::int32_t range_min(std::size_t lo, std::size_t hi) const;  // over lcp_[lo..hi]

    std::string pattern_;
    std::vector<std::string> refs_;
    std::vector<std::size_t> ref_offset_;          // start of each ref in the concatenation
    std::vector<std::int32_t> rank_;               // position -> suffix array rank
    std::vector<std::vector<std::int32_t>> min_;   // min_[j][i] = min lcp over [i, i + 2^j)
};

}  // namespace eds
