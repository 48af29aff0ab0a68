#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace eds {

// Border table of a pattern: f(i) is the length of the longest proper
// prefix of P that is also a suffix of P[1..i]. Immutable after build.
class FailureFunction {
public:
    explicit FailureFunction(std::string_view pattern);

    std::size_t pattern_length() const { return table_.size(); }
    std::size_t operator()(std::size_t i) const;  // 1-based, i in [1, m]

private:
    std::vector<std::size_t> table_;
};

FailureFunction build_failure(std::string_view pattern);

// Streaming scan state: how many pattern letters are currently matched.
struct KmpState {
    std::size_t matched = 0;
};

// Feeds one letter. Returns the new state and whether the full pattern was
// just completed. A state of m is accepted on entry and continues from the
// failure link, so overlapping matches are found by plain re-stepping.
std::pair<KmpState, bool> step(KmpState state, const FailureFunction& failure,
                               std::string_view pattern, char letter);

// All occurrences of pattern in text as 1-based inclusive (start, end)
// pairs, sorted.
std::vector<std::pair<std::size_t, std::size_t>> find_occurrences(std::string_view pattern,
                                                                  std::string_view text);

// All lengths b >= 1 such that P[1..b] is a suffix of a scanned text whose
// end state is q: the chain q, f(q), f(f(q)), ... down to but excluding 0.
std::vector<std::size_t> border_chain(const FailureFunction& failure, std::size_t q);

}  // namespace eds
