#pragma once

// Corpus loading, byte statistics and reproducible pattern sampling.
//
// Sampling uses std::mt19937_64, whose output sequence is fixed by the C++
// standard, with our own rejection step instead of
// std::uniform_int_distribution (whose mapping is implementation-defined), so
// a (corpus, m, k, seed) tuple yields the same patterns on every platform.

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocknaive/core.hpp"
#include "blocknaive/orders.hpp"

namespace blocknaive {

inline constexpr std::string_view kSamplerRng = "mt19937_64";

inline std::size_t alphabet_size(Text t) noexcept {
    std::array<bool, 256> seen{};
    std::size_t distinct = 0;
    for (byte_t b : t.bytes()) {
        if (!seen[b]) {
            seen[b] = true;
            ++distinct;
        }
    }
    return distinct;
}

class Corpus {
public:
    Corpus(std::string name, std::vector<byte_t> bytes)
        : name_(std::move(name)), bytes_(std::move(bytes)), alphabet_size_(blocknaive::alphabet_size(Text(bytes_))) {}

    const std::string& name() const noexcept { return name_; }
    Text text() const noexcept { return Text(bytes_); }
    std::size_t size() const noexcept { return bytes_.size(); }
    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    const std::vector<byte_t>& bytes() const noexcept { return bytes_; }

private:
    std::string name_;
    std::vector<byte_t> bytes_;
    std::size_t alphabet_size_;
};

/// Reads the file verbatim. The corpus is named after the file name.
inline Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus " + path.string());
    std::vector<byte_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("read failed: " + path.string());
    return Corpus(path.filename().string(), std::move(bytes));
}

inline FrequencyTable build_frequency_table(Text t) {
    FrequencyTable f;
    f.add(t.bytes());
    return f;
}

inline FrequencyTable build_frequency_table(const Corpus& c) { return build_frequency_table(c.text()); }

struct PatternSet {
    std::size_t m = 0;
    std::uint64_t seed = 0;
    std::vector<Pattern> patterns;
    std::vector<std::size_t> source_positions;  // 1-based start of each pattern in the corpus
};

namespace detail {

/// Uniform integer in [0, bound) by rejection on the raw generator output.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = rng(); while (x >= limit);
    return x % bound;
}

/// splitmix64 finalizer; used to derive independent per-cell seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// k substrings of length m from uniformly random start positions.
inline PatternSet sample_patterns(const Corpus& c, std::size_t m, std::size_t k, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("sample_patterns: m must be >= 1");
    if (k < 1) throw std::invalid_argument("sample_patterns: k must be >= 1");
    if (m > c.size())
        throw std::invalid_argument("sample_patterns: m = " + std::to_string(m) + " exceeds corpus " + c.name() +
                                    " of length " + std::to_string(c.size()));
    PatternSet set;
    set.m = m;
    set.seed = seed;
    std::mt19937_64 rng(seed);
    const std::uint64_t starts = c.size() - m + 1;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t at = detail::uniform_below(rng, starts);
        set.patterns.emplace_back(std::span<const byte_t>(c.bytes().data() + at, m));
        set.source_positions.push_back(at + 1);
    }
    return set;
}

}  // namespace blocknaive
