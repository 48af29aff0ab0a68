#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eds/generate.hpp"
#include "eds/matcher.hpp"
#include "eds/naive.hpp"
#include "eds/text.hpp"
#include "eds/variants.hpp"

namespace {

// exit codes: 0 ok, 1 I/O, 2 parse/validation, 3 budget, 4 check mismatch
constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path + "'");
    return buf.str();
}

std::string read_text_source(const std::string& source) {
    if (source == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return read_file(source);
}

eds::EdsText load_text(const std::string& source) {
    const eds::EdsText text = eds::parse_eds(read_text_source(source));
    for (std::size_t i = 0; i < text.symbol_count(); ++i)
        if (text.symbols()[i].alternatives.size() == 1)
            std::cerr << "warning: symbol " << (i + 1) << " has a single alternative\n";
    return text;
}

std::string load_pattern(const std::string& arg) {
    std::string pattern = arg;
    if (!arg.empty() && arg.front() == '@') {
        pattern = read_file(arg.substr(1));
        if (!pattern.empty() && pattern.back() == '\n') pattern.pop_back();
        if (!pattern.empty() && pattern.back() == '\r') pattern.pop_back();
    }
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    for (char c : pattern) {
        if (std::isspace(static_cast<unsigned char>(c)))
            throw std::invalid_argument("whitespace in pattern");
        if (!eds::is_permitted_letter(c))
            throw std::invalid_argument("pattern letter outside the permitted alphabet");
    }
    return pattern;
}

eds::IntRange parse_range(const std::string& s) {
    const auto parse_one = [&](const std::string& part) {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad range '" + s + "'");
        return static_cast<std::size_t>(v);
    };
    const std::size_t dots = s.find("..");
    eds::IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_one(s);
    } else {
        r.lo = parse_one(s.substr(0, dots));
        r.hi = parse_one(s.substr(dots + 2));
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + s + "'");
    return r;
}

void write_output(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << bytes;
    if (!out.flush()) throw IoError("cannot write '" + path + "'");
}

int cmd_match(const std::string& pattern_arg, const std::string& text_arg, bool json) {
    const std::string pattern = load_pattern(pattern_arg);
    const eds::EdsText text = load_text(text_arg);
    const eds::MatchReport rep = eds::search(pattern, text);
    if (json) {
        const eds::TextStats st = eds::stats(text);
        nlohmann::json doc;
        doc["occurrences"] = nlohmann::json::array();
        for (const auto& o : rep.occurrences) doc["occurrences"].push_back({o.head, o.tail});
        doc["n"] = st.n;
        doc["N"] = st.N;
        doc["k"] = st.k;
        doc["alpha"] = st.alpha;
        doc["gamma"] = rep.gamma;
        std::cout << doc.dump() << "\n";
    } else {
        for (const auto& o : rep.occurrences) std::cout << o.head << "\t" << o.tail << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& pattern_arg, const std::string& text_arg,
              const eds::ExpansionBudget& budget) {
    const std::string pattern = load_pattern(pattern_arg);
    const eds::EdsText text = load_text(text_arg);
    const std::vector<eds::Occurrence> expected = eds::naive_occurrences(pattern, text, budget);
    const std::vector<eds::Occurrence> got = eds::search(pattern, text).occurrences;
    if (expected == got) {
        std::cout << "ok: " << got.size() << " occurrences\n";
        return kExitOk;
    }
    for (const auto& o : got)
        if (!std::binary_search(expected.begin(), expected.end(), o))
            std::cout << "matcher only: " << o.head << "\t" << o.tail << "\n";
    for (const auto& o : expected)
        if (!std::binary_search(got.begin(), got.end(), o))
            std::cout << "oracle only: " << o.head << "\t" << o.tail << "\n";
    return kExitMismatch;
}

int cmd_stats(const std::string& text_arg) {
    const eds::TextStats st = eds::stats(load_text(text_arg));
    std::cout << "n=" << st.n << "\n"
              << "N=" << st.N << "\n"
              << "k=" << st.k << "\n"
              << "alpha=" << st.alpha << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern matching over elastic-degenerate texts"};
    app.require_subcommand(1);

    std::string pattern_arg, text_arg, out_path, ref_path, vars_path;
    bool json = false;
    eds::ExpansionBudget budget;

    auto* match = app.add_subcommand("match", "find all pattern occurrences");
    match->add_option("-p,--pattern", pattern_arg, "pattern, or @file")->required();
    match->add_option("-t,--text", text_arg, "text file, or - for stdin")->required();
    match->add_flag("--json", json, "emit one JSON document");

    auto* check = app.add_subcommand("check", "diff the matcher against the brute-force oracle");
    check->add_option("-p,--pattern", pattern_arg, "pattern, or @file")->required();
    check->add_option("-t,--text", text_arg, "text file, or - for stdin")->required();
    check->add_option("--max-strings", budget.max_strings, "possibility-set size cap");
    check->add_option("--max-letters", budget.max_total_letters, "expanded letters cap");

    auto* stats_cmd = app.add_subcommand("stats", "print n, N, k and alpha");
    stats_cmd->add_option("-t,--text", text_arg, "text file, or - for stdin")->required();

    std::string k_range = "2..6", seed_len = "0..8", alts = "2..4", alt_len = "1..6";
    std::uint64_t rng_seed = 0;
    std::size_t sigma = 4;
    double empty_prob = 0.0;
    auto* generate = app.add_subcommand("generate", "write a random text");
    generate->add_option("--seed", rng_seed, "rng seed");
    generate->add_option("--k", k_range, "seed count range A..B");
    generate->add_option("--seed-len", seed_len, "seed length range A..B");
    generate->add_option("--alts", alts, "alternatives per symbol range A..B");
    generate->add_option("--alt-len", alt_len, "alternative length range A..B");
    generate->add_option("--sigma", sigma, "alphabet size");
    generate->add_option("--empty-prob", empty_prob, "chance an alternative is empty");
    generate->add_option("-o,--output", out_path, "output file")->required();

    auto* convert = app.add_subcommand("convert", "build a text from a reference and variants");
    convert->add_option("--ref", ref_path, "reference file ('>' lines ignored)")->required();
    convert->add_option("--vars", vars_path, "variants file, pos<TAB>ref<TAB>alts")->required();
    convert->add_option("-o,--output", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (match->parsed()) return cmd_match(pattern_arg, text_arg, json);
        if (check->parsed()) return cmd_check(pattern_arg, text_arg, budget);
        if (stats_cmd->parsed()) return cmd_stats(text_arg);
        if (generate->parsed()) {
            eds::GeneratorParams params;
            params.seed_count = parse_range(k_range);
            params.seed_length = parse_range(seed_len);
            params.alternative_count = parse_range(alts);
            params.alternative_length = parse_range(alt_len);
            params.alphabet_size = sigma;
            params.empty_probability = empty_prob;
            write_output(out_path, eds::serialize_eds(eds::generate_random(params, rng_seed)) + "\n");
            return kExitOk;
        }
        if (convert->parsed()) {
            std::istringstream ref_in(read_file(ref_path));
            std::istringstream vars_in(read_file(vars_path));
            const eds::EdsText text =
                eds::from_reference_and_variants(eds::read_reference(ref_in), eds::parse_variants_tsv(vars_in));
            write_output(out_path, eds::serialize_eds(text) + "\n");
            return kExitOk;
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const eds::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const eds::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
