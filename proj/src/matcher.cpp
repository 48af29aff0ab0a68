#include "eds/matcher.hpp"

#include <algorithm>
#include <stdexcept>

namespace eds {

TickSet::TickSet(std::size_t symbol_index, std::size_t pattern_length)
    : symbol_index_(symbol_index), flags_(pattern_length, 0) {}

void TickSet::set(std::size_t matched_length) {
    if (matched_length < 1 || matched_length >= flags_.size())
        throw std::out_of_range("tick outside [1, m-1]");
    if (!flags_[matched_length]) {
        flags_[matched_length] = 1;
        ticks_.push_back(matched_length);
    }
}

SearchRun::SearchRun(std::string_view pattern, const EdsText& text)
    : pattern_(pattern), text_(text), failure_(pattern) {
    for (char c : pattern_)
        if (!is_permitted_letter(c))
            throw std::invalid_argument("pattern letter outside the permitted alphabet");
    if (text_.symbol_count() > 0) {
        // One oracle for the whole text: refs are the seeds followed by the
        // alternatives of every symbol in order.
        std::vector<std::string> refs(text_.seeds());
        alt_ref_base_.resize(text_.symbol_count());
        for (std::size_t i = 0; i < text_.symbol_count(); ++i) {
            alt_ref_base_[i] = refs.size();
            const auto& alts = text_.symbols()[i].alternatives;
            refs.insert(refs.end(), alts.begin(), alts.end());
        }
        oracle_.emplace(pattern_, std::move(refs));
    }
}

std::size_t SearchRun::alt_ref(std::size_t symbol_index, std::size_t alt_index) const {
    return alt_ref_base_[symbol_index] + alt_index;
}

std::size_t SearchRun::lce_from(std::size_t matched, std::size_t ref_id) const {
    return oracle_->lce(matched + 1, ref_id, 1);
}

void SearchRun::record(std::size_t head, std::size_t tail) {
    occurrences_.insert(Occurrence{head, tail});
}

void SearchRun::run() {
    for (std::size_t i = 0; i < text_.seed_count(); ++i) {
        const std::size_t q = scan_seed(i);
        if (i < text_.symbol_count()) {
            process_type1(i, q);
            process_type2(i);
        }
    }
}

std::size_t SearchRun::scan_seed(std::size_t seed_index) {
    const std::string& seed = text_.seeds().at(seed_index);
    const std::size_t m = pattern_.size();
    KmpState state;
    for (std::size_t off = 0; off < seed.size(); ++off) {
        auto [next, full] = step(state, failure_, pattern_, seed[off]);
        state = next;
        if (full) {
            const std::size_t end_pos = text_.seed_start(seed_index) + off;
            record(end_pos - m + 1, end_pos);
        }
    }
    return state.matched;
}

void SearchRun::process_type1(std::size_t seed_index, std::size_t end_state) {
    if (seed_index >= text_.symbol_count())
        throw std::out_of_range("no symbol follows the last seed");
    const std::size_t m = pattern_.size();
    const auto& alts = text_.symbols()[seed_index].alternatives;

    for (std::size_t b : border_chain(failure_, end_state)) {
        if (b == m) continue;  // a full match ending at the seed end was already reported
        ++counters_.heads_tested;
        const std::size_t head = text_.seed_end(seed_index) - b + 1;
        TickSet ticks(seed_index, m);
        for (std::size_t j = 0; j < alts.size(); ++j) {
            const std::size_t l = lce_from(b, alt_ref(seed_index, j));
            if (l == m - b)
                record(head, text_.symbol_position(seed_index));
            else if (l == alts[j].size() && b + alts[j].size() < m)
                ticks.set(b + alts[j].size());
        }
        extend(ticks, head);
    }
}

void SearchRun::process_type2(std::size_t symbol_index) {
    if (symbol_index >= text_.symbol_count()) throw std::out_of_range("symbol index out of range");
    const std::size_t m = pattern_.size();
    const std::size_t head = text_.symbol_position(symbol_index);
    ++counters_.heads_tested;

    // All alternatives tick into one shared set: the head is the symbol's
    // single position either way.
    TickSet ticks(symbol_index, m);
    for (const std::string& alt : text_.symbols()[symbol_index].alternatives) {
        KmpState state;
        for (char ch : alt) {
            auto [next, full] = step(state, failure_, pattern_, ch);
            state = next;
            if (full) record(head, head);
        }
        for (std::size_t b : border_chain(failure_, state.matched))
            if (b < m) ticks.set(b);
    }
    extend(ticks, head);
}

void SearchRun::extend(const TickSet& ticks, std::size_t head) { extend_impl(ticks, head, 1); }

void SearchRun::extend_impl(const TickSet& ticks, std::size_t head, std::size_t depth) {
    ++counters_.extend_calls;
    if (!ticks.any()) return;
    counters_.max_extend_depth = std::max(counters_.max_extend_depth, depth);

    const std::size_t m = pattern_.size();
    const std::size_t next_seed = ticks.symbol_index() + 1;
    const std::size_t next_symbol = ticks.symbol_index() + 1;
    const bool has_next_symbol = next_symbol < text_.symbol_count();
    const std::size_t seed_len = text_.seeds()[next_seed].size();

    TickSet next(next_symbol, m);
    for (std::size_t t : ticks.ticks()) {
        const std::size_t l_s = lce_from(t, seed_ref(next_seed));
        if (l_s == m - t) {
            record(head, text_.seed_start(next_seed) + (m - t) - 1);
        } else if (l_s == seed_len) {
            const std::size_t e = t + seed_len;  // e < m here
            if (!has_next_symbol) continue;
            const auto& alts = text_.symbols()[next_symbol].alternatives;
            for (std::size_t j = 0; j < alts.size(); ++j) {
                const std::size_t l_e = lce_from(e, alt_ref(next_symbol, j));
                if (l_e == m - e)
                    record(head, text_.symbol_position(next_symbol));
                else if (l_e == alts[j].size() && e + alts[j].size() < m)
                    next.set(e + alts[j].size());
            }
        }
    }
    if (next.any()) extend_impl(next, head, depth + 1);
}

MatchReport SearchRun::report() const {
    MatchReport rep;
    rep.occurrences.assign(occurrences_.begin(), occurrences_.end());
    for (const Occurrence& o : rep.occurrences)
        rep.gamma = std::max(rep.gamma, text_.symbols_spanned(o.head, o.tail));
    rep.counters = counters_;
    return rep;
}

MatchReport search(std::string_view pattern, const EdsText& text) {
    SearchRun run(pattern, text);
    run.run();
    return run.report();
}

bool eds_matches_solid(const EdsText& text, std::string_view y) {
    std::vector<char> reach(y.size() + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < text.seed_count(); ++i) {
        const std::string& seed = text.seeds()[i];
        if (!seed.empty()) {
            std::vector<char> next(y.size() + 1, 0);
            for (std::size_t l = 0; l + seed.size() <= y.size(); ++l)
                if (reach[l] && y.compare(l, seed.size(), seed) == 0) next[l + seed.size()] = 1;
            reach.swap(next);
        }
        if (i < text.symbol_count()) {
            std::vector<char> next(y.size() + 1, 0);
            for (std::size_t l = 0; l <= y.size(); ++l) {
                if (!reach[l]) continue;
                for (const std::string& alt : text.symbols()[i].alternatives)
                    if (l + alt.size() <= y.size() && y.compare(l, alt.size(), alt) == 0)
                        next[l + alt.size()] = 1;
            }
            reach.swap(next);
        }
    }
    return reach[y.size()] != 0;
}

namespace {

// Depth-first search over the alternatives inside one occurrence span.
class Verifier {
public:
    Verifier(std::string_view pattern, const EdsText& text, Occurrence occ)
        : pattern_(pattern), text_(text), occ_(occ) {}

    std::optional<OccurrenceWitness> run() {
        OccurrenceWitness witness;
        const PositionInfo head = text_.position_info(occ_.head);
        text_.position_info(occ_.tail);  // range check

        if (head.kind == PositionKind::Solid) {
            if (from_seed(head.segment_index - 1, head.local_offset - 1, 0, witness)) return witness;
            return std::nullopt;
        }

        const std::size_t sym = head.segment_index - 1;
        const auto& alts = text_.symbols()[sym].alternatives;
        if (occ_.head == occ_.tail) {
            // entirely inside one alternative
            for (std::size_t j = 0; j < alts.size(); ++j) {
                if (alts[j].find(pattern_) != std::string::npos) {
                    witness.choices.emplace_back(sym, j);
                    return witness;
                }
            }
            return std::nullopt;
        }
        // starts inside an alternative and leaves it: some suffix of the
        // alternative must be a proper prefix of the pattern
        for (std::size_t j = 0; j < alts.size(); ++j) {
            const std::string& a = alts[j];
            const std::size_t max_x = std::min(a.size(), pattern_.size() - 1);
            for (std::size_t x = 1; x <= max_x; ++x) {
                if (pattern_.substr(0, x) != std::string_view(a).substr(a.size() - x)) continue;
                witness.choices.emplace_back(sym, j);
                if (from_seed(sym + 1, 0, x, witness)) return witness;
                witness.choices.pop_back();
            }
        }
        return std::nullopt;
    }

private:
    bool from_seed(std::size_t seed_index, std::size_t offset, std::size_t consumed,
                   OccurrenceWitness& witness) {
        const std::string& seed = text_.seeds()[seed_index];
        const std::size_t m = pattern_.size();
        const std::size_t rem = m - consumed;
        const std::size_t avail = seed.size() - offset;
        if (rem <= avail) {
            if (pattern_.substr(consumed) != std::string_view(seed).substr(offset, rem)) return false;
            return text_.seed_start(seed_index) + offset + rem - 1 == occ_.tail;
        }
        if (pattern_.substr(consumed, avail) != std::string_view(seed).substr(offset)) return false;
        consumed += avail;
        if (seed_index >= text_.symbol_count()) return false;  // pattern runs off the text

        const auto& alts = text_.symbols()[seed_index].alternatives;
        for (std::size_t j = 0; j < alts.size(); ++j) {
            const std::string& a = alts[j];
            const std::size_t rem2 = m - consumed;
            witness.choices.emplace_back(seed_index, j);
            if (rem2 <= a.size() && pattern_.substr(consumed) == std::string_view(a).substr(0, rem2)) {
                if (text_.symbol_position(seed_index) == occ_.tail) return true;
            }
            if (a.size() < rem2 && pattern_.substr(consumed, a.size()) == a) {
                if (from_seed(seed_index + 1, 0, consumed + a.size(), witness)) return true;
            }
            witness.choices.pop_back();
        }
        return false;
    }

    std::string_view pattern_;
    const EdsText& text_;
    Occurrence occ_;
};

}  // namespace

std::optional<OccurrenceWitness> verify_occurrence(std::string_view pattern, const EdsText& text,
                                                   Occurrence occurrence) {
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    if (occurrence.head < 1 || occurrence.head > occurrence.tail || occurrence.tail > text.length())
        throw std::out_of_range("occurrence positions out of range");
    return Verifier(pattern, text, occurrence).run();
}

}  // namespace eds
