#pragma once

// Comparison orders: the sequence in which pattern positions are checked
// against an alignment. Any permutation gives the same matches; a good one
// rejects non-matching alignments sooner.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blocknaive/core.hpp"

namespace blocknaive {

/// Permutation of the 1-based pattern positions {1..m}.
class ComparisonOrder {
public:
    ComparisonOrder() = default;

    explicit ComparisonOrder(std::vector<std::uint32_t> positions) : positions_(std::move(positions)) {
        std::vector<bool> seen(positions_.size() + 1, false);
        for (std::uint32_t p : positions_) {
            if (p < 1 || p > positions_.size() || seen[p])
                throw std::invalid_argument("comparison order is not a permutation of 1..m");
            seen[p] = true;
        }
    }

    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }
    /// Pattern position (1-based) checked at step k (0-based).
    std::uint32_t operator[](std::size_t k) const noexcept { return positions_[k]; }
    std::span<const std::uint32_t> positions() const noexcept { return positions_; }
    auto begin() const noexcept { return positions_.begin(); }
    auto end() const noexcept { return positions_.end(); }

    friend bool operator==(const ComparisonOrder&, const ComparisonOrder&) = default;

private:
    std::vector<std::uint32_t> positions_;
};

/// Byte occurrence counts from some training corpus.
class FrequencyTable {
public:
    using Counts = std::array<std::uint64_t, 256>;

    FrequencyTable() { counts_.fill(0); }
    explicit FrequencyTable(const Counts& counts) : counts_(counts) {
        total_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
    }

    void add(std::span<const byte_t> bytes) noexcept {
        for (byte_t b : bytes) ++counts_[b];
        total_ += bytes.size();
    }

    std::uint64_t count(byte_t b) const noexcept { return counts_[b]; }
    std::uint64_t total() const noexcept { return total_; }
    const Counts& counts() const noexcept { return counts_; }

    friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

private:
    Counts counts_;
    std::uint64_t total_ = 0;
};

enum class OrderKind { identity, frequency, pi_h, pi_hs };

inline std::string_view to_string(OrderKind k) noexcept {
    switch (k) {
        case OrderKind::identity: return "identity";
        case OrderKind::frequency: return "freq";
        case OrderKind::pi_h: return "pih";
        case OrderKind::pi_hs: return "pihs";
    }
    return "?";
}

inline std::optional<OrderKind> parse_order_kind(std::string_view s) noexcept {
    if (s == "identity") return OrderKind::identity;
    if (s == "freq") return OrderKind::frequency;
    if (s == "pih") return OrderKind::pi_h;
    if (s == "pihs") return OrderKind::pi_hs;
    return std::nullopt;
}

inline ComparisonOrder identity_order(std::size_t m) {
    if (m < 1) throw std::invalid_argument("identity_order: m must be >= 1");
    std::vector<std::uint32_t> pi(m);
    std::iota(pi.begin(), pi.end(), 1u);
    return ComparisonOrder(std::move(pi));
}

/// Rarest byte first; equal counts keep ascending position.
inline ComparisonOrder frequency_order(const Pattern& p, const FrequencyTable& f) {
    std::vector<std::uint32_t> pi(p.size());
    std::iota(pi.begin(), pi.end(), 1u);
    std::stable_sort(pi.begin(), pi.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return f.count(p[a - 1]) < f.count(p[b - 1]); });
    return ComparisonOrder(std::move(pi));
}

/// Fixed order avoiding adjacent positions: 1, m, then the stride-3 chains
/// 4,7,10,... / 3,6,9,... / 2,5,8,...; positions already taken are skipped.
inline ComparisonOrder pi_h_order(std::size_t m) {
    if (m < 1) throw std::invalid_argument("pi_h_order: m must be >= 1");
    std::vector<std::uint32_t> pi;
    pi.reserve(m);
    std::vector<bool> taken(m + 1, false);
    auto emit = [&](std::size_t pos) {
        if (pos <= m && !taken[pos]) {
            taken[pos] = true;
            pi.push_back(static_cast<std::uint32_t>(pos));
        }
    };
    emit(1);
    emit(m);
    for (std::size_t chain : {4u, 3u, 2u})
        for (std::size_t pos = chain; pos <= m; pos += 3) emit(pos);
    return ComparisonOrder(std::move(pi));
}

/// pi_h over the non-space positions (by rank), then the spaces ascending.
inline ComparisonOrder pi_hs_order(const Pattern& p, byte_t space = 0x20) {
    std::vector<std::uint32_t> rest, spaces;
    for (std::uint32_t pos = 1; pos <= p.size(); ++pos) (p[pos - 1] == space ? spaces : rest).push_back(pos);

    std::vector<std::uint32_t> pi;
    pi.reserve(p.size());
    if (!rest.empty())
        for (std::uint32_t rank : pi_h_order(rest.size())) pi.push_back(rest[rank - 1]);
    pi.insert(pi.end(), spaces.begin(), spaces.end());
    return ComparisonOrder(std::move(pi));
}

/// Builds the order of the given kind. A frequency order needs a table.
inline ComparisonOrder make_order(OrderKind kind, const Pattern& p, const FrequencyTable* table = nullptr,
                                  byte_t space = 0x20) {
    switch (kind) {
        case OrderKind::identity: return identity_order(p.size());
        case OrderKind::pi_h: return pi_h_order(p.size());
        case OrderKind::pi_hs: return pi_hs_order(p, space);
        case OrderKind::frequency:
            if (table == nullptr) throw ConfigError("frequency order requires a frequency table");
            return frequency_order(p, *table);
    }
    throw ConfigError("unknown order kind");
}

// Text format: 256 lines "byte_value count", decimal, one per byte value.

inline void write_frequency_table(std::ostream& os, const FrequencyTable& f) {
    for (unsigned b = 0; b < 256; ++b) os << b << ' ' << f.count(static_cast<byte_t>(b)) << '\n';
}

inline FrequencyTable read_frequency_table(std::istream& is) {
    FrequencyTable::Counts counts{};
    std::array<bool, 256> seen{};
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw FormatError("frequency table line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (lineno > 256) fail("more than 256 lines");
        const char* first = line.data();
        const char* last = line.data() + line.size();

        unsigned byte = 0;
        auto [p1, e1] = std::from_chars(first, last, byte);
        if (e1 != std::errc{} || p1 == first) fail("expected byte value");
        if (byte > 255) fail("byte value out of range");
        if (p1 == last || *p1 != ' ') fail("expected single space after byte value");
        ++p1;

        std::uint64_t count = 0;
        auto [p2, e2] = std::from_chars(p1, last, count);
        if (e2 != std::errc{} || p2 == p1) fail("expected count");
        if (p2 != last) fail("trailing characters");

        if (seen[byte]) fail("duplicate byte value " + std::to_string(byte));
        seen[byte] = true;
        counts[byte] = count;
    }
    if (lineno != 256) throw FormatError("frequency table has " + std::to_string(lineno) + " lines, expected 256");
    return FrequencyTable(counts);
}

inline void save_frequency_table(const std::filesystem::path& path, const FrequencyTable& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path.string() + " for writing");
    write_frequency_table(os, f);
    if (!os.flush()) throw IoError("write failed: " + path.string());
}

inline FrequencyTable load_frequency_table(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path.string());
    return read_frequency_table(is);
}

}  // namespace blocknaive
