#include "eds/lce.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace eds {

namespace {

// Suffix array by prefix doubling over sorted cyclic shifts; values in s
// must be >= 1, a 0 sentinel is appended internally. O(n log n).
std::vector<std::int32_t> build_suffix_array(std::vector<std::int32_t> s) {
    s.push_back(0);
    const std::int32_t n = static_cast<std::int32_t>(s.size());
    const std::int32_t alphabet = *std::max_element(s.begin(), s.end()) + 1;

    std::vector<std::int32_t> p(n), c(n), pn(n), cn(n);
    std::vector<std::int32_t> cnt(std::max(alphabet, n), 0);

    for (std::int32_t i = 0; i < n; ++i) cnt[s[i]]++;
    for (std::int32_t i = 1; i < alphabet; ++i) cnt[i] += cnt[i - 1];
    for (std::int32_t i = 0; i < n; ++i) p[--cnt[s[i]]] = i;
    c[p[0]] = 0;
    std::int32_t classes = 1;
    for (std::int32_t i = 1; i < n; ++i) {
        if (s[p[i]] != s[p[i - 1]]) ++classes;
        c[p[i]] = classes - 1;
    }

    for (std::int32_t h = 0; (1 << h) < n && classes < n; ++h) {
        const std::int32_t k = 1 << h;
        for (std::int32_t i = 0; i < n; ++i) {
            pn[i] = p[i] - k;
            if (pn[i] < 0) pn[i] += n;
        }
        std::fill(cnt.begin(), cnt.begin() + classes, 0);
        for (std::int32_t i = 0; i < n; ++i) cnt[c[pn[i]]]++;
        for (std::int32_t i = 1; i < classes; ++i) cnt[i] += cnt[i - 1];
        for (std::int32_t i = n - 1; i >= 0; --i) p[--cnt[c[pn[i]]]] = pn[i];
        cn[p[0]] = 0;
        std::int32_t next_classes = 1;
        for (std::int32_t i = 1; i < n; ++i) {
            const std::pair<std::int32_t, std::int32_t> cur{c[p[i]], c[(p[i] + k) % n]};
            const std::pair<std::int32_t, std::int32_t> prev{c[p[i - 1]], c[(p[i - 1] + k) % n]};
            if (cur != prev) ++next_classes;
            cn[p[i]] = next_classes - 1;
        }
        c.swap(cn);
        classes = next_classes;
    }
    // p[0] is the appended sentinel suffix; drop it.
    return std::vector<std::int32_t>(p.begin() + 1, p.end());
}

// Kasai's algorithm: lcp[r] = LCP of the suffixes ranked r-1 and r.
std::vector<std::int32_t> build_lcp(const std::vector<std::int32_t>& s,
                                    const std::vector<std::int32_t>& sa,
                                    std::vector<std::int32_t>& rank_out) {
    const std::int32_t n = static_cast<std::int32_t>(sa.size());
    rank_out.assign(n, 0);
    for (std::int32_t r = 0; r < n; ++r) rank_out[sa[r]] = r;
    std::vector<std::int32_t> lcp(n, 0);
    std::int32_t h = 0;
    for (std::int32_t i = 0; i < n; ++i) {
        if (rank_out[i] == 0) {
            h = 0;
            continue;
        }
        const std::int32_t j = sa[rank_out[i] - 1];
        while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
        lcp[rank_out[i]] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace

LceOracle::LceOracle(std::string pattern, std::vector<std::string> refs)
    : pattern_(std::move(pattern)), refs_(std::move(refs)) {
    if (pattern_.empty()) throw std::invalid_argument("empty pattern");

    // Letters are remapped above the per-string separator values 1..r+1 so
    // that no common extension can cross a string boundary.
    const std::int32_t letter_base = static_cast<std::int32_t>(refs_.size()) + 2;
    std::size_t total = pattern_.size() + 1;
    for (const auto& r : refs_) total += r.size() + 1;

    std::vector<std::int32_t> concat;
    concat.reserve(total);
    for (char ch : pattern_) concat.push_back(letter_base + static_cast<unsigned char>(ch));
    concat.push_back(1);
    ref_offset_.resize(refs_.size());
    for (std::size_t i = 0; i < refs_.size(); ++i) {
        ref_offset_[i] = concat.size();
        for (char ch : refs_[i]) concat.push_back(letter_base + static_cast<unsigned char>(ch));
        concat.push_back(static_cast<std::int32_t>(i) + 2);
    }

    const auto sa = build_suffix_array(concat);
    auto lcp = build_lcp(concat, sa, rank_);

    const std::size_t n = lcp.size();
    const std::size_t levels = std::max<std::size_t>(1, std::bit_width(n));
    min_.resize(levels);
    min_[0] = std::move(lcp);
    for (std::size_t j = 1; j < levels; ++j) {
        const std::size_t span = std::size_t{1} << j;
        if (span > n) break;
        min_[j].resize(n - span + 1);
        for (std::size_t i = 0; i + span <= n; ++i)
            min_[j][i] = std::min(min_[j - 1][i], min_[j - 1][i + span / 2]);
    }
}

const std::string& LceOracle::ref(std::size_t ref_id) const {
    if (ref_id >= refs_.size()) throw std::out_of_range("ref id out of range");
    return refs_[ref_id];
}

std::int32_t LceOracle::range_min(std::size_t lo, std::size_t hi) const {
    const std::size_t j = std::bit_width(hi - lo + 1) - 1;
    return std::min(min_[j][lo], min_[j][hi + 1 - (std::size_t{1} << j)]);
}

std::size_t LceOracle::lce(std::size_t pattern_pos, std::size_t ref_id, std::size_t ref_pos) const {
    const std::size_t m = pattern_.size();
    if (pattern_pos < 1 || pattern_pos > m + 1)
        throw std::out_of_range("pattern position outside [1, m+1]");
    if (ref_id >= refs_.size()) throw std::out_of_range("ref id out of range");
    const std::string& r = refs_[ref_id];
    if (ref_pos < 1 || ref_pos > r.size() + 1)
        throw std::out_of_range("ref position outside [1, |ref|+1]");
    if (pattern_pos == m + 1 || ref_pos == r.size() + 1) return 0;

    std::size_t ra = static_cast<std::size_t>(rank_[pattern_pos - 1]);
    std::size_t rb = static_cast<std::size_t>(rank_[ref_offset_[ref_id] + ref_pos - 1]);
    if (ra > rb) std::swap(ra, rb);
    return static_cast<std::size_t>(range_min(ra + 1, rb));
}

}  // namespace eds
