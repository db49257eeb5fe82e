#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
//   search  count (or report) occurrences of a pattern in a file
//   freq    write the byte frequency table of a file
//   bench   run the timing harness and emit CSV
//   probe   list the block widths usable on this machine
//
// Exit codes: 0 success, 1 I/O error, 2 usage or configuration error,
// 3 benchmark checksum mismatch.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "blocknaive/baselines.hpp"
#include "blocknaive/bench.hpp"
#include "blocknaive/block_compare.hpp"
#include "blocknaive/corpus.hpp"
#include "blocknaive/matchers.hpp"
#include "blocknaive/orders.hpp"

namespace blocknaive::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    std::string pattern;
    std::string pattern_file;
    bool hex = false;
    std::string text_path;
    std::string algo = "block";
    std::string width = "auto";
    std::string order;  // empty: freq when a table is available, else pih (naive: identity)
    std::string freq_table;
    bool freq_from_text = false;
    std::size_t peel = 0;  // 0: default policy
    bool report = false;
    unsigned space = 0x20;
    bool stats = false;
};

struct BenchOptions {
    std::vector<std::string> corpora;
    std::vector<std::string> algorithms;
    std::vector<std::size_t> m_values;
    std::size_t runs = 30;
    std::size_t patterns = 1;
    std::uint64_t seed = 1;
    std::string output;
    std::string plot_dir;
    bool no_warmup = false;
};

namespace detail {

inline std::vector<byte_t> decode_hex(std::string_view s) {
    std::vector<byte_t> out;
    int hi = -1;
    for (char ch : s) {
        if (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') continue;
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else throw UsageError(std::string("invalid hex digit '") + ch + "'");
        if (hi < 0) {
            hi = v;
        } else {
            out.push_back(static_cast<byte_t>(hi * 16 + v));
            hi = -1;
        }
    }
    if (hi >= 0) throw UsageError("hex pattern has an odd number of digits");
    return out;
}

inline std::vector<byte_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Pattern load_pattern(const SearchOptions& o) {
    std::vector<byte_t> bytes;
    if (!o.pattern_file.empty()) {
        bytes = read_file(o.pattern_file);
        if (o.hex) bytes = decode_hex(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    } else {
        bytes = o.hex ? decode_hex(o.pattern) : std::vector<byte_t>(o.pattern.begin(), o.pattern.end());
    }
    if (bytes.empty()) throw UsageError("pattern must not be empty");
    return Pattern(bytes);
}

inline int run_search(const SearchOptions& o, std::ostream& out, std::ostream& err) {
    if (o.pattern.empty() == o.pattern_file.empty())
        throw UsageError("give exactly one of --pattern or --pattern-file");
    const Pattern pattern = load_pattern(o);
    const Corpus corpus = load_corpus(o.text_path);
    const Text text = corpus.text();

    std::optional<FrequencyTable> table;
    if (!o.freq_table.empty()) table = load_frequency_table(o.freq_table);
    else if (o.freq_from_text) table = build_frequency_table(corpus);

    SearchReport report;
    if (o.algo == "sbndm2" || o.algo == "sbndm4") {
        report = SbndmMatcher(pattern, o.algo == "sbndm2" ? 2 : 4)
                     .search(text, o.report ? Mode::reporting : Mode::counting);
    } else if (o.algo == "block" || o.algo == "naive") {
        const bool block = o.algo == "block";
        OrderKind order = block ? (table ? OrderKind::frequency : OrderKind::pi_h) : OrderKind::identity;
        if (!o.order.empty()) order = *parse_order_kind(o.order);
        if (order == OrderKind::frequency && !table)
            throw UsageError("--order freq needs --freq-table or --freq-from-text");

        SearchConfig cfg;
        if (block) {
            const WidthSet available = capability_probe();
            if (o.width == "auto") {
                cfg.width = available.best();
            } else {
                cfg.width = width_from_lanes(static_cast<unsigned>(std::stoul(o.width)));
                if (!available.contains(*cfg.width))
                    throw ConfigError("block width " + o.width + " is not available on this machine");
            }
        }
        cfg.order = make_order(order, pattern, table ? &*table : nullptr, static_cast<byte_t>(o.space));
        cfg.peel_r = o.peel != 0 ? o.peel : block ? default_peel_factor(order, corpus.alphabet_size()) : 1;
        cfg.mode = o.report ? Mode::reporting : Mode::counting;
        cfg.instrument = o.stats;
        report = Matcher(pattern, std::move(cfg)).search(text);
    } else {
        throw UsageError("unknown algorithm " + o.algo);
    }

    out << report.count << '\n';
    if (report.positions)
        for (std::size_t p : *report.positions) out << p << '\n';
    if (report.comparisons)
        err << "symbol_comparisons " << report.comparisons->symbol_comparisons << "\nblock_comparisons "
            << report.comparisons->block_comparisons << '\n';
    return kExitOk;
}

inline int run_freq(const std::string& input, const std::string& output, std::ostream& out) {
    const FrequencyTable table = build_frequency_table(load_corpus(input));
    if (output.empty()) write_frequency_table(out, table);
    else save_frequency_table(output, table);
    return kExitOk;
}

inline int run_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
    BenchPlan plan;
    for (const auto& path : o.corpora) plan.corpora.push_back(load_corpus(path));
    if (!o.algorithms.empty()) {
        plan.algorithms.clear();
        for (const auto& name : o.algorithms) {
            auto spec = parse_algorithm(name);
            if (!spec) throw UsageError("unknown algorithm " + name);
            plan.algorithms.push_back(std::move(*spec));
        }
    }
    if (!o.m_values.empty()) plan.m_values = o.m_values;
    plan.runs = o.runs;
    plan.patterns_per_cell = o.patterns;
    plan.seed = o.seed;
    plan.warmup = !o.no_warmup;

    const BenchResult result = run_benchmark(plan);
    if (o.output.empty()) emit_csv(out, result.records);
    else emit_csv(std::filesystem::path(o.output), result.records);
    if (!o.plot_dir.empty()) write_plot_data(o.plot_dir, result.records);

    err << "sampler " << kSamplerRng << " seed " << plan.seed << ", " << result.records.size() << " records\n";
    for (const auto& p : result.problems) err << "checksum mismatch: " << p << '\n';
    return result.consistent() ? kExitOk : kExitMismatch;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Block-parallel naive exact string matching"};
    app.require_subcommand(1);

    SearchOptions so;
    auto* search = app.add_subcommand("search", "Count or report occurrences of a pattern");
    auto* pat = search->add_option("-p,--pattern", so.pattern, "Pattern bytes (verbatim)");
    auto* patf = search->add_option("--pattern-file", so.pattern_file, "Read the pattern from a file");
    pat->excludes(patf);
    search->add_flag("--hex", so.hex, "Pattern is given as hex digits");
    search->add_option("-t,--text", so.text_path, "Text file to search")->required();
    search->add_option("-a,--algo", so.algo, "block | naive | sbndm2 | sbndm4")
        ->check(CLI::IsMember({"block", "naive", "sbndm2", "sbndm4"}));
    search->add_option("-w,--width", so.width, "Block width: auto | 8 | 16 | 32")
        ->check(CLI::IsMember({"auto", "8", "16", "32"}));
    search->add_option("-o,--order", so.order, "identity | freq | pih | pihs")
        ->check(CLI::IsMember({"identity", "freq", "pih", "pihs"}));
    auto* ft = search->add_option("--freq-table", so.freq_table, "Frequency table file");
    auto* fft = search->add_flag("--freq-from-text", so.freq_from_text, "Build the frequency table from the text");
    ft->excludes(fft);
    search->add_option("-r,--peel", so.peel, "Peeling factor (default: policy for order and alphabet)");
    search->add_flag("--report", so.report, "Print positions (1-based) after the count");
    search->add_flag("--count", "Print only the count (default)");
    search->add_option("--space", so.space, "Byte treated as space by the pihs order")->check(CLI::Range(0, 255));
    search->add_flag("--stats", so.stats, "Print comparison counters to stderr");

    std::string freq_in, freq_out;
    auto* freq = app.add_subcommand("freq", "Write the byte frequency table of a file");
    freq->add_option("-i,--input", freq_in, "Input file")->required();
    freq->add_option("-o,--output", freq_out, "Output file (default: stdout)");

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Run the timing harness and emit CSV");
    bench->add_option("-c,--corpus", bo.corpora, "Corpus files")->required();
    bench->add_option("-a,--algos", bo.algorithms, "Algorithms (default: full line-up)")->delimiter(',');
    bench->add_option("-m,--m-list", bo.m_values, "Pattern lengths (default 4,8,...,64)")->delimiter(',');
    bench->add_option("--runs", bo.runs, "Timed runs per cell")->check(CLI::PositiveNumber);
    bench->add_option("--patterns", bo.patterns, "Distinct sampled patterns per cell")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bo.seed, "Sampling seed");
    bench->add_option("-o,--output", bo.output, "CSV output file (default: stdout)");
    bench->add_option("--plot-dir", bo.plot_dir, "Also write one plot-data file per corpus here");
    bench->add_flag("--no-warmup", bo.no_warmup, "Skip the untimed warm-up search");

    auto* probe = app.add_subcommand("probe", "List usable block widths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (search->parsed()) return detail::run_search(so, out, err);
        if (freq->parsed()) return detail::run_freq(freq_in, freq_out, out);
        if (bench->parsed()) return detail::run_bench(bo, out, err);
        if (probe->parsed()) {
            for (BlockWidth w : capability_probe().list()) out << lanes(w) << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {  // includes ConfigError
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}

}  // namespace blocknaive::cli
