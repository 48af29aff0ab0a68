#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eds/kmp.hpp"
#include "eds/lce.hpp"
#include "eds/text.hpp"

namespace eds {

// Matched-prefix lengths of the pattern that are realizable ending exactly
// at the right boundary of one symbol, for one head under test.
class TickSet {
public:
    TickSet(std::size_t symbol_index, std::size_t pattern_length);

    std::size_t symbol_index() const { return symbol_index_; }
    void set(std::size_t matched_length);  // 1 <= t < m
    bool any() const { return !ticks_.empty(); }
    const std::vector<std::size_t>& ticks() const { return ticks_; }

private:
    std::size_t symbol_index_;
    std::vector<char> flags_;
    std::vector<std::size_t> ticks_;
};

struct SearchCounters {
    std::uint64_t heads_tested = 0;
    std::uint64_t extend_calls = 0;
    std::size_t max_extend_depth = 0;
};

struct MatchReport {
    std::vector<Occurrence> occurrences;  // sorted by (head, tail), duplicate-free
    std::size_t gamma = 0;                // most symbols spanned by any reported occurrence
    SearchCounters counters;
};

// One search of a solid pattern over a text. A fresh KMP scan runs over each
// seed; prefixes of the pattern that survive to a segment boundary become
// ticks that are extended across the following seeds and symbols with O(1)
// LCE queries. Occurrence starts inside alternatives are seeded by scanning
// each alternative. The stages are public so tests can drive them one at a
// time; search() below runs the whole pipeline.
class SearchRun {
public:
    SearchRun(std::string_view pattern, const EdsText& text);

    void run();

    // KMP over one seed. Reports the occurrences lying inside it and returns
    // the scan state at the seed end (m when the seed ends on a full match).
    std::size_t scan_seed(std::size_t seed_index);

    // Occurrences starting inside seed i and crossing into symbol i.
    void process_type1(std::size_t seed_index, std::size_t end_state);

    // Occurrences starting inside an alternative of symbol i, including the
    // ones that lie entirely within one alternative.
    void process_type2(std::size_t symbol_index);

    // Extends each tick across the next seed and symbol, recursing while new
    // ticks appear. No-op for an empty tick set.
    void extend(const TickSet& ticks, std::size_t head);

    const std::set<Occurrence>& occurrences() const { return occurrences_; }
    MatchReport report() const;

private:
    void extend_impl(const TickSet& ticks, std::size_t head, std::size_t depth);
    void record(std::size_t head, std::size_t tail);
    std::size_t lce_from(std::size_t matched, std::size_t ref_id) const;
    std::size_t seed_ref(std::size_t seed_index) const { return seed_index; }
    std::size_t alt_ref(std::size_t symbol_index, std::size_t alt_index) const;

    std::string pattern_;
    const EdsText& text_;
    FailureFunction failure_;
    std::optional<LceOracle> oracle_;
    std::vector<std::size_t> alt_ref_base_;
    std::set<Occurrence> occurrences_;
    SearchCounters counters_;
};

// All occurrences of pattern in text, deduplicated and sorted.
MatchReport search(std::string_view pattern, const EdsText& text);

// True iff y is realizable from the whole text with one alternative chosen
// per symbol. Dynamic programming over consumed-prefix lengths of y; the
// possibility set is never expanded.
bool eds_matches_solid(const EdsText& text, std::string_view y);

// Alternative choices realizing one occurrence: one (symbol index,
// alternative index) pair per symbol in the span, in text order, 0-based.
struct OccurrenceWitness {
    std::vector<std::pair<std::size_t, std::size_t>> choices;
};

// Checks an occurrence against the text by exhaustive search over the
// alternatives in its span. Independent of the search machinery above.
std::optional<OccurrenceWitness> verify_occurrence(std::string_view pattern, const EdsText& text,
                                                   Occurrence occurrence);

}  // namespace eds
