#include "eds/variants.hpp"

#include <charconv>
#include <istream>
#include <stdexcept>

namespace eds {

EdsText from_reference_and_variants(std::string_view reference, const std::vector<Variant>& variants) {
    std::vector<std::string> seeds;
    std::vector<DegenerateSymbol> symbols;
    std::size_t cursor = 1;  // next unconsumed reference position

    for (std::size_t v = 0; v < variants.size(); ++v) {
        const Variant& var = variants[v];
        if (var.pos < 1 || var.pos + var.ref.size() > reference.size() + 1)
            throw std::invalid_argument("variant " + std::to_string(v + 1) +
                                        " lies outside the reference");
        if (var.pos < cursor)
            throw std::invalid_argument("variant " + std::to_string(v + 1) +
                                        " overlaps the previous variant or is out of order");
        if (reference.substr(var.pos - 1, var.ref.size()) != var.ref)
            throw std::invalid_argument("variant " + std::to_string(v + 1) +
                                        " ref field does not match the reference");

        seeds.emplace_back(reference.substr(cursor - 1, var.pos - cursor));
        DegenerateSymbol sym;
        sym.alternatives.push_back(var.ref);
        sym.alternatives.insert(sym.alternatives.end(), var.alts.begin(), var.alts.end());
        symbols.push_back(std::move(sym));
        cursor = var.pos + var.ref.size();
    }
    seeds.emplace_back(reference.substr(cursor - 1));
    return EdsText(std::move(seeds), std::move(symbols));
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = s.find(sep, start);
        out.emplace_back(s.substr(start, end - start));
        if (end == std::string_view::npos) return out;
        start = end + 1;
    }
}

}  // namespace

std::vector<Variant> parse_variants_tsv(std::istream& in) {
    std::vector<Variant> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        const auto fields = split(line, '\t');
        if (fields.size() != 3)
            throw std::invalid_argument("variants line " + std::to_string(lineno) +
                                        ": expected pos<TAB>ref<TAB>alts");
        Variant var;
        const std::string& p = fields[0];
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), var.pos);
        if (ec != std::errc{} || ptr != p.data() + p.size() || var.pos < 1)
            throw std::invalid_argument("variants line " + std::to_string(lineno) +
                                        ": bad position '" + p + "'");
        var.ref = fields[1];
        var.alts = split(fields[2], ',');
        out.push_back(std::move(var));
    }
    return out;
}

std::string read_reference(std::istream& in) {
    std::string reference;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '>') continue;
        reference += line;
    }
    return reference;
}

}  // namespace eds
