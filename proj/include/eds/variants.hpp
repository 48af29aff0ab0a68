#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eds/text.hpp"

namespace eds {

// One variant site against a reference: at 1-based pos the reference bases
// ref (possibly empty for an insertion) may be replaced by any of alts
// (empty alternatives model deletions).
struct Variant {
    std::size_t pos = 0;
    std::string ref;
    std::vector<std::string> alts;
};

// Builds a text whose symbols are {ref, alts...} at each variant site, with
// the untouched reference stretches as seeds. Variants must be sorted and
// their reference intervals must not overlap; each ref field must match the
// reference. Throws std::invalid_argument otherwise.
EdsText from_reference_and_variants(std::string_view reference, const std::vector<Variant>& variants);

// Tab-separated lines "pos<TAB>ref<TAB>alt1[,alt2,...]"; '#' lines and blank
// lines are ignored.
std::vector<Variant> parse_variants_tsv(std::istream& in);

// Plain text; lines beginning '>' are ignored, the rest are concatenated.
std::string read_reference(std::istream& in);

}  // namespace eds
