#pragma once

// Timing harness: corpora × pattern lengths × algorithms, repeated runs.
//
// Each (corpus, m) cell samples its patterns once, cross-checks the summed
// occurrence count of every algorithm against the brute-force reference and
// times `runs` repetitions after one untimed warm-up. Times are wall-clock
// (std::chrono::steady_clock) in milliseconds; the process is assumed to be
// otherwise idle, which is the only way wall time approximates user time.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "blocknaive/baselines.hpp"
#include "blocknaive/corpus.hpp"
#include "blocknaive/matchers.hpp"
#include "blocknaive/orders.hpp"

namespace blocknaive {

enum class AlgorithmKind { scalar, block, sbndm };

struct AlgorithmSpec {
    std::string label;
    AlgorithmKind kind = AlgorithmKind::block;
    std::optional<BlockWidth> width;
    OrderKind order = OrderKind::identity;
    std::optional<std::size_t> peel;  // empty: default_peel_factor for the corpus
    unsigned q = 0;                   // SBNDM only
};

/// Algorithm names:
///   naive                        scalar engine, identity order, r = 1
///   naive-freq, naive-fixed      scalar engine with frequency / pi_h order
///   N8, N16, N32                 block engine, identity order
///   N16-freq, N16-fixed, N16-fixeds   frequency / pi_h / pi_hs order
///   SBNDM2, SBNDM4
/// A suffix "@r" pins the peeling factor, e.g. "N32-freq@2".
inline std::optional<AlgorithmSpec> parse_algorithm(std::string_view name) {
    AlgorithmSpec spec;
    spec.label = std::string(name);

    std::optional<std::size_t> peel;
    if (auto at = name.find('@'); at != std::string_view::npos) {
        std::size_t r = 0;
        const auto digits = name.substr(at + 1);
        auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
        if (ec != std::errc{} || p != digits.data() + digits.size() || r == 0) return std::nullopt;
        peel = r;
        name = name.substr(0, at);
    }

    if (name == "SBNDM2" || name == "SBNDM4") {
        if (peel) return std::nullopt;
        spec.kind = AlgorithmKind::sbndm;
        spec.q = name.back() == '2' ? 2 : 4;
        return spec;
    }

    std::string_view base = name;
    std::string_view variant;
    if (auto dash = name.find('-'); dash != std::string_view::npos) {
        base = name.substr(0, dash);
        variant = name.substr(dash + 1);
        if (variant.empty()) return std::nullopt;
    }
    if (variant.empty()) spec.order = OrderKind::identity;
    else if (variant == "freq") spec.order = OrderKind::frequency;
    else if (variant == "fixed") spec.order = OrderKind::pi_h;
    else if (variant == "fixeds") spec.order = OrderKind::pi_hs;
    else return std::nullopt;

    if (base == "naive") {
        spec.kind = AlgorithmKind::scalar;
        spec.peel = peel.value_or(1);
        return spec;
    }
    if (base == "N8") spec.width = BlockWidth::w8;
    else if (base == "N16") spec.width = BlockWidth::w16;
    else if (base == "N32") spec.width = BlockWidth::w32;
    else return std::nullopt;
    spec.kind = AlgorithmKind::block;
    spec.peel = peel;
    return spec;
}

/// Scalar naive, the width 8/16/32 block engines with identity, frequency and
/// fixed order, and both SBNDM baselines.
inline std::vector<AlgorithmSpec> default_algorithms() {
    std::vector<AlgorithmSpec> out;
    for (std::string_view name : {"naive", "N8", "N8-freq", "N8-fixed", "N16", "N16-freq", "N16-fixed", "N32",
                                  "N32-freq", "N32-fixed", "SBNDM2", "SBNDM4"})
        out.push_back(*parse_algorithm(name));
    return out;
}

struct BenchPlan {
    std::vector<Corpus> corpora;
    std::vector<AlgorithmSpec> algorithms = default_algorithms();
    std::vector<std::size_t> m_values = {4, 8, 12, 16, 20, 24, 28, 32, 36, 40, 44, 48, 52, 56, 60, 64};
    std::size_t runs = 30;
    std::size_t patterns_per_cell = 1;
    std::uint64_t seed = 1;
    bool warmup = true;
    WidthSet available = capability_probe();
};

struct BenchRecord {
    std::string corpus;
    std::string algorithm;
    std::size_t m = 0;
    std::size_t runs = 0;
    double mean_ms = 0;
    double stddev_ms = 0;
    std::uint64_t checksum = 0;
    std::string config;  // "skipped" for cells that could not run
    bool skipped = false;
    bool valid = true;  // checksum agrees with the reference count
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::vector<std::string> problems;  // one line per invalid cell

    bool consistent() const noexcept { return problems.empty(); }
};

struct TimingStats {
    double mean_ms = 0;
    double stddev_ms = 0;
    double median_ms = 0;
    std::vector<double> samples_ms;
};

/// Times `runs` calls of fn with steady_clock.
inline TimingStats measure(std::size_t runs, const std::function<void()>& fn) {
    TimingStats s;
    s.samples_ms.reserve(runs);
    for (std::size_t r = 0; r < runs; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        s.samples_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    if (runs == 0) return s;
    double sum = 0;
    for (double x : s.samples_ms) sum += x;
    s.mean_ms = sum / static_cast<double>(runs);
    double sq = 0;
    for (double x : s.samples_ms) sq += (x - s.mean_ms) * (x - s.mean_ms);
    s.stddev_ms = runs > 1 ? std::sqrt(sq / static_cast<double>(runs - 1)) : 0.0;
    std::vector<double> sorted = s.samples_ms;
    std::sort(sorted.begin(), sorted.end());
    s.median_ms = runs % 2 ? sorted[runs / 2] : (sorted[runs / 2 - 1] + sorted[runs / 2]) / 2;
    return s;
}

namespace detail {

/// One configured searcher per sampled pattern.
class CellSearcher {
public:
    CellSearcher(const AlgorithmSpec& spec, const PatternSet& patterns, const FrequencyTable& freq,
                 std::size_t alphabet, WidthSet available) {
        if (spec.kind == AlgorithmKind::sbndm) {
            for (const Pattern& p : patterns.patterns) engines_.emplace_back(SbndmMatcher(p, spec.q));
            config_ = "q=" + std::to_string(spec.q);
            return;
        }
        const std::size_t r = spec.peel.value_or(default_peel_factor(spec.order, alphabet));
        for (const Pattern& p : patterns.patterns) {
            SearchConfig cfg;
            cfg.width = spec.width;
            cfg.order = make_order(spec.order, p, &freq);
            cfg.peel_r = r;
            engines_.emplace_back(Matcher(p, std::move(cfg), available));
        }
        config_ = (spec.width ? "w=" + to_string(*spec.width) : std::string("scalar")) + ";order=" +
                  std::string(to_string(spec.order)) + ";r=" + std::to_string(std::min(r, patterns.m));
    }

    std::uint64_t run(Text t) const {
        std::uint64_t total = 0;
        for (const auto& e : engines_)
            total += std::visit([&](const auto& engine) { return engine.search(t).count; }, e);
        return total;
    }

    const std::string& config() const noexcept { return config_; }

private:
    std::vector<std::variant<Matcher, SbndmMatcher>> engines_;
    std::string config_;
};

}  // namespace detail

inline BenchResult run_benchmark(const BenchPlan& plan) {
    if (plan.patterns_per_cell < 1) throw std::invalid_argument("patterns_per_cell must be >= 1");
    BenchResult result;
    const std::string seed_note = ";rng=" + std::string(kSamplerRng) + ";seed=" + std::to_string(plan.seed);

    for (std::size_t ci = 0; ci < plan.corpora.size(); ++ci) {
        const Corpus& corpus = plan.corpora[ci];
        const FrequencyTable freq = build_frequency_table(corpus);
        const Text text = corpus.text();

        for (std::size_t m : plan.m_values) {
            auto skipped = [&](const AlgorithmSpec& spec) {
                BenchRecord rec;
                rec.corpus = corpus.name();
                rec.algorithm = spec.label;
                rec.m = m;
                rec.config = "skipped";
                rec.skipped = true;
                result.records.push_back(std::move(rec));
            };
            if (m < 1 || m > corpus.size()) {
                for (const auto& spec : plan.algorithms) skipped(spec);
                continue;
            }

            const std::uint64_t cell_seed = detail::mix_seed(plan.seed ^ detail::mix_seed((ci << 20) ^ m));
            const PatternSet patterns = sample_patterns(corpus, m, plan.patterns_per_cell, cell_seed);
            std::uint64_t expected = 0;
            for (const Pattern& p : patterns.patterns) expected += oracle_count(p, text).count;

            for (const auto& spec : plan.algorithms) {
                if ((spec.width && !plan.available.contains(*spec.width)) ||
                    (spec.kind == AlgorithmKind::sbndm && m < spec.q)) {
                    skipped(spec);
                    continue;
                }
                const detail::CellSearcher searcher(spec, patterns, freq, corpus.alphabet_size(), plan.available);

                BenchRecord rec;
                rec.corpus = corpus.name();
                rec.algorithm = spec.label;
                rec.m = m;
                rec.runs = plan.runs;
                rec.config = searcher.config() + seed_note;

                std::optional<std::uint64_t> checksum;
                if (plan.warmup) checksum = searcher.run(text);
                bool stable = true;
                const TimingStats stats = measure(plan.runs, [&] {
                    const std::uint64_t c = searcher.run(text);
                    if (!checksum) checksum = c;
                    else if (c != *checksum) stable = false;
                });
                if (!checksum) checksum = searcher.run(text);

                rec.mean_ms = stats.mean_ms;
                rec.stddev_ms = stats.stddev_ms;
                rec.checksum = *checksum;
                rec.valid = stable && rec.checksum == expected;
                if (!rec.valid)
                    result.problems.push_back(corpus.name() + " m=" + std::to_string(m) + " " + spec.label +
                                              ": checksum " + std::to_string(rec.checksum) + ", reference " +
                                              std::to_string(expected) + (stable ? "" : " (unstable across runs)"));
                result.records.push_back(std::move(rec));
            }
        }
    }
    return result;
}

inline constexpr std::string_view kCsvHeader = "corpus,algorithm,m,runs,mean_ms,stddev_ms,checksum,config";

/// Rows ordered by (corpus, m, algorithm). Skipped cells have empty time,
/// run and checksum fields and config "skipped".
inline void emit_csv(std::ostream& os, std::vector<BenchRecord> records) {
    std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return std::tie(a.corpus, a.m, a.algorithm) < std::tie(b.corpus, b.m, b.algorithm);
    });
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.corpus << ',' << r.algorithm << ',' << r.m << ',';
        if (r.skipped) {
            os << ",,,,skipped\n";
            continue;
        }
        os << r.runs << ',' << std::fixed << std::setprecision(6) << r.mean_ms << ',' << r.stddev_ms << ','
           << r.checksum << ',' << r.config << '\n';
    }
}

inline void emit_csv(const std::filesystem::path& path, const std::vector<BenchRecord>& records) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    emit_csv(os, records);
    if (!os.flush()) throw IoError("write failed: " + path.string());
}

/// One whitespace-separated file per corpus: column m, then the mean time of
/// each algorithm (NaN for skipped cells). Returns the files written.
inline std::vector<std::filesystem::path> write_plot_data(const std::filesystem::path& dir,
                                                          const std::vector<BenchRecord>& records) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

    std::vector<std::string> corpora, algorithms;
    std::map<std::string, std::map<std::size_t, std::map<std::string, const BenchRecord*>>> table;
    for (const auto& r : records) {
        if (std::find(corpora.begin(), corpora.end(), r.corpus) == corpora.end()) corpora.push_back(r.corpus);
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
            algorithms.push_back(r.algorithm);
        table[r.corpus][r.m][r.algorithm] = &r;
    }

    std::vector<std::filesystem::path> written;
    for (const auto& corpus : corpora) {
        const auto path = dir / (corpus + ".dat");
        std::ofstream os(path, std::ios::binary);
        if (!os) throw IoError("cannot open " + path.string() + " for writing");
        os << "# m";
        for (const auto& a : algorithms) os << ' ' << a;
        os << '\n';
        for (const auto& [m, row] : table[corpus]) {
            os << m;
            for (const auto& a : algorithms) {
                auto it = row.find(a);
                if (it == row.end() || it->second->skipped) os << " NaN";
                else os << ' ' << std::fixed << std::setprecision(6) << it->second->mean_ms;
            }
            os << '\n';
        }
        if (!os.flush()) throw IoError("write failed: " + path.string());
        written.push_back(path);
    }
    return written;
}

}  // namespace blocknaive
