#include "eds/text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace eds {

bool is_permitted_letter(char c) {
    const unsigned char u = static_cast<unsigned char>(c);
    if (u < 0x21 || u > 0x7e) return false;  // control, space, DEL, non-ASCII
    return c != '{' && c != '}' && c != ',';
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

std::size_t DegenerateSymbol::min_length() const {
    std::size_t best = alternatives.empty() ? 0 : alternatives.front().size();
    for (const auto& a : alternatives) best = std::min(best, a.size());
    return best;
}

std::size_t DegenerateSymbol::max_length() const {
    std::size_t best = 0;
    for (const auto& a : alternatives) best = std::max(best, a.size());
    return best;
}

EdsText::EdsText() : seeds_{std::string()} { build_index(); }

EdsText::EdsText(std::vector<std::string> seeds, std::vector<DegenerateSymbol> symbols)
    : seeds_(std::move(seeds)), symbols_(std::move(symbols)) {
    validate();
    build_index();
}

void EdsText::validate() const {
    if (seeds_.empty()) throw std::invalid_argument("a text needs at least one seed");
    if (symbols_.size() + 1 != seeds_.size())
        throw std::invalid_argument("a text with k seeds needs exactly k-1 symbols");
    for (const auto& s : seeds_)
        for (char c : s)
            if (!is_permitted_letter(c)) throw std::invalid_argument("seed letter outside the permitted alphabet");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const auto& sym = symbols_[i];
        if (sym.alternatives.empty())
            throw std::invalid_argument("symbol " + std::to_string(i + 1) + " has no alternatives");
        // A lone empty alternative cannot be written back in the concrete
        // syntax ("{}" is reserved for the zero-alternative error) and is
        // semantically a no-op, so it is rejected outright.
        if (sym.alternatives.size() == 1 && sym.alternatives.front().empty())
            throw std::invalid_argument("symbol " + std::to_string(i + 1) +
                                        " consists of a single empty alternative");
        for (const auto& a : sym.alternatives)
            for (char c : a)
                if (!is_permitted_letter(c))
                    throw std::invalid_argument("alternative letter outside the permitted alphabet");
    }
}

void EdsText::build_index() {
    seed_start_.resize(seeds_.size());
    symbol_pos_.resize(symbols_.size());
    std::size_t pos = 1;
    total_size_ = 0;
    for (std::size_t i = 0; i < seeds_.size(); ++i) {
        seed_start_[i] = pos;
        pos += seeds_[i].size();
        total_size_ += seeds_[i].size();
        if (i < symbols_.size()) {
            symbol_pos_[i] = pos;
            ++pos;
            for (const auto& a : symbols_[i].alternatives) total_size_ += a.size();
        }
    }
    length_ = pos - 1;
}

std::size_t EdsText::seed_start(std::size_t seed_index) const {
    if (seed_index >= seeds_.size()) throw std::out_of_range("seed index out of range");
    return seed_start_[seed_index];
}

std::size_t EdsText::seed_end(std::size_t seed_index) const {
    if (seed_index >= seeds_.size()) throw std::out_of_range("seed index out of range");
    if (seeds_[seed_index].empty()) throw std::out_of_range("empty seed has no last letter");
    return seed_start_[seed_index] + seeds_[seed_index].size() - 1;
}

std::size_t EdsText::symbol_position(std::size_t symbol_index) const {
    if (symbol_index >= symbols_.size()) throw std::out_of_range("symbol index out of range");
    return symbol_pos_[symbol_index];
}

std::size_t EdsText::symbols_spanned(std::size_t head, std::size_t tail) const {
    const auto lo = std::lower_bound(symbol_pos_.begin(), symbol_pos_.end(), head);
    const auto hi = std::upper_bound(symbol_pos_.begin(), symbol_pos_.end(), tail);
    return hi > lo ? static_cast<std::size_t>(hi - lo) : 0;
}

PositionInfo EdsText::position_info(std::size_t position) const {
    if (position < 1 || position > length_)
        throw std::out_of_range("position " + std::to_string(position) + " outside [1, " +
                                std::to_string(length_) + "]");
    const auto it = std::lower_bound(symbol_pos_.begin(), symbol_pos_.end(), position);
    if (it != symbol_pos_.end() && *it == position) {
        const std::size_t idx = static_cast<std::size_t>(it - symbol_pos_.begin());
        return PositionInfo{position, PositionKind::Degenerate, idx + 1, 0};
    }
    // Seeds and symbols interleave, so the number of symbol positions before
    // this one identifies the containing seed.
    const std::size_t seed_idx = static_cast<std::size_t>(it - symbol_pos_.begin());
    return PositionInfo{position, PositionKind::Solid, seed_idx + 1, position - seed_start_[seed_idx] + 1};
}

bool EdsText::operator==(const EdsText& other) const {
    return seeds_ == other.seeds_ && symbols_ == other.symbols_;
}

EdsText parse_eds(std::string_view input) {
    std::vector<std::string> seeds;
    std::vector<DegenerateSymbol> symbols;
    std::string current_seed;
    std::string current_alt;
    std::vector<std::string> alts;
    bool in_symbol = false;
    bool has_comma = false;
    std::size_t open_offset = 0;

    for (std::size_t i = 0; i < input.size(); ++i) {
        const char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        switch (c) {
            case '{':
                if (in_symbol) throw ParseError("nested '{'", i);
                seeds.push_back(std::move(current_seed));
                current_seed.clear();
                in_symbol = true;
                has_comma = false;
                alts.clear();
                current_alt.clear();
                open_offset = i;
                break;
            case '}':
                if (!in_symbol) throw ParseError("'}' without a matching '{'", i);
                if (!has_comma && current_alt.empty())
                    throw ParseError("symbol with zero alternatives", open_offset);
                alts.push_back(std::move(current_alt));
                current_alt.clear();
                symbols.push_back(DegenerateSymbol{std::move(alts)});
                alts = {};
                in_symbol = false;
                break;
            case ',':
                if (!in_symbol) throw ParseError("',' outside a symbol", i);
                has_comma = true;
                alts.push_back(std::move(current_alt));
                current_alt.clear();
                break;
            default:
                if (!is_permitted_letter(c)) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "0x%02x", static_cast<unsigned char>(c));
                    throw ParseError(std::string("byte ") + buf + " outside the permitted alphabet", i);
                }
                (in_symbol ? current_alt : current_seed).push_back(c);
        }
    }
    if (in_symbol) throw ParseError("unclosed '{'", open_offset);
    seeds.push_back(std::move(current_seed));
    return EdsText(std::move(seeds), std::move(symbols));
}

EdsText parse_eds(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_eds(std::string_view(buf.view()));
}

void serialize_eds(const EdsText& text, std::ostream& out) {
    const auto& seeds = text.seeds();
    const auto& symbols = text.symbols();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        out << seeds[i];
        if (i < symbols.size()) {
            out << '{';
            const auto& alts = symbols[i].alternatives;
            for (std::size_t j = 0; j < alts.size(); ++j) {
                if (j > 0) out << ',';
                out << alts[j];
            }
            out << '}';
        }
    }
}

std::string serialize_eds(const EdsText& text) {
    std::ostringstream out;
    serialize_eds(text, out);
    return out.str();
}

TextStats stats(const EdsText& text) {
    TextStats st;
    st.n = text.length();
    st.N = text.total_size();
    st.k = text.seed_count();
    for (const auto& sym : text.symbols()) {
        st.alpha = std::max(st.alpha, sym.alternatives.size());
        st.alternatives_total += sym.alternatives.size();
    }
    return st;
}

}  // namespace eds
