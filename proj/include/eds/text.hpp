#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eds {

// Letters are printable ASCII minus the syntax characters '{', '}', ','
// and whitespace.
bool is_permitted_letter(char c);

// Parse failure; offset is the 0-based byte offset into the original input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// An elastic-degenerate symbol: an ordered, non-empty list of alternative
// strings. Alternatives may be empty (deletions) and may repeat.
struct DegenerateSymbol {
    std::vector<std::string> alternatives;

    std::size_t min_length() const;
    std::size_t max_length() const;

    bool operator==(const DegenerateSymbol&) const = default;
};

enum class PositionKind { Solid, Degenerate };

// Classification of one text position. segment_index is 1-based (seed i or
// symbol i); local_offset is the 1-based offset inside the seed for solid
// positions and 0 for degenerate ones.
struct PositionInfo {
    std::size_t position = 0;
    PositionKind kind = PositionKind::Solid;
    std::size_t segment_index = 0;
    std::size_t local_offset = 0;

    bool operator==(const PositionInfo&) const = default;
};

struct TextStats {
    std::size_t n = 0;      // length: seed letters plus one position per symbol
    std::size_t N = 0;      // total size: every letter, including all alternatives
    std::size_t k = 0;      // seed count
    std::size_t alpha = 0;  // largest number of alternatives in any symbol
    std::size_t alternatives_total = 0;

    bool operator==(const TextStats&) const = default;
};

// A pattern occurrence as a (head, tail) pair of 1-based text positions.
// Either end may sit on a degenerate position.
struct Occurrence {
    std::size_t head = 0;
    std::size_t tail = 0;

    auto operator<=>(const Occurrence&) const = default;
};

// An elastic-degenerate text: k seeds interleaved with k-1 degenerate
// symbols, S1 e1 S2 e2 ... e(k-1) Sk. Every seed letter occupies one
// position and every symbol occupies exactly one position, so the length n
// is the seed letters plus k-1. Positions are 1-based. Immutable after
// construction; safe to share between threads.
class EdsText {
public:
    EdsText();  // single empty seed
    EdsText(std::vector<std::string> seeds, std::vector<DegenerateSymbol> symbols);

    const std::vector<std::string>& seeds() const { return seeds_; }
    const std::vector<DegenerateSymbol>& symbols() const { return symbols_; }

    std::size_t seed_count() const { return seeds_.size(); }  // k
    std::size_t symbol_count() const { return symbols_.size(); }
    std::size_t length() const { return length_; }          // n
    std::size_t total_size() const { return total_size_; }  // N

    // Coordinate helpers. Segment ids are 0-based, positions 1-based.
    std::size_t seed_start(std::size_t seed_index) const;
    std::size_t seed_end(std::size_t seed_index) const;  // seed must be non-empty
    std::size_t symbol_position(std::size_t symbol_index) const;

    // Number of degenerate positions within [head, tail].
    std::size_t symbols_spanned(std::size_t head, std::size_t tail) const;

    PositionInfo position_info(std::size_t position) const;

    bool operator==(const EdsText& other) const;

private:
    void validate() const;
    void build_index();

    std::vector<std::string> seeds_;
    std::vector<DegenerateSymbol> symbols_;
    std::vector<std::size_t> seed_start_;
    std::vector<std::size_t> symbol_pos_;
    std::size_t length_ = 0;
    std::size_t total_size_ = 0;
};

// Concrete syntax: seeds are runs of letters, symbols are "{alt,alt,...}".
// "a{b,}c" carries an empty second alternative; "}{", a leading "{...}" or
// a trailing "...}" produce empty seeds. Whitespace is ignored everywhere.
// "{}" (zero alternatives), nested or unclosed braces, and "," or "}"
// outside a symbol are errors.
EdsText parse_eds(std::string_view input);
EdsText parse_eds(std::istream& in);

std::string serialize_eds(const EdsText& text);
void serialize_eds(const EdsText& text, std::ostream& out);

TextStats stats(const EdsText& text);

}  // namespace eds
