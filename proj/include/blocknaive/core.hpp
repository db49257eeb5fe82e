#pragma once

// Shared domain types and the brute-force reference search.
//
// Positions handed out by the public API are 1-based: the first byte of a
// text is position 1. Engines work on 0-based offsets internally.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace blocknaive {

using byte_t = std::uint8_t;

/// Raised when a matcher or harness is configured with something this
/// machine or this pattern cannot support (unavailable width, bad order).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File could not be read or written. The message names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed serialized data (frequency tables).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-owning, immutable view of the text being searched.
class Text {
public:
    constexpr Text() noexcept = default;
    constexpr explicit Text(std::span<const byte_t> bytes) noexcept : bytes_(bytes) {}
    explicit Text(std::string_view s) noexcept
        : bytes_(reinterpret_cast<const byte_t*>(s.data()), s.size()) {}
    explicit Text(const std::vector<byte_t>& v) noexcept : bytes_(v.data(), v.size()) {}

    constexpr std::size_t size() const noexcept { return bytes_.size(); }
    constexpr bool empty() const noexcept { return bytes_.empty(); }
    constexpr const byte_t* data() const noexcept { return bytes_.data(); }
    constexpr std::span<const byte_t> bytes() const noexcept { return bytes_; }
    constexpr byte_t operator[](std::size_t i) const noexcept { return bytes_[i]; }

private:
    std::span<const byte_t> bytes_;
};

/// Owned pattern bytes; never empty.
class Pattern {
public:
    explicit Pattern(std::span<const byte_t> bytes) : bytes_(bytes.begin(), bytes.end()) {
        if (bytes_.empty()) throw std::invalid_argument("pattern must not be empty");
    }
    explicit Pattern(std::string_view s)
        : Pattern(std::span<const byte_t>(reinterpret_cast<const byte_t*>(s.data()), s.size())) {}

    std::size_t size() const noexcept { return bytes_.size(); }
    const byte_t* data() const noexcept { return bytes_.data(); }
    std::span<const byte_t> bytes() const noexcept { return bytes_; }
    byte_t operator[](std::size_t i) const noexcept { return bytes_[i]; }
    std::string_view view() const noexcept {
        return {reinterpret_cast<const char*>(bytes_.data()), bytes_.size()};
    }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::vector<byte_t> bytes_;
};

enum class Mode { counting, reporting };

/// Work counters. Scalar comparisons count single bytes; block comparisons
/// count calls to the width-α compare primitive. They are never summed.
struct Instrumentation {
    std::uint64_t symbol_comparisons = 0;
    std::uint64_t block_comparisons = 0;

    friend bool operator==(const Instrumentation&, const Instrumentation&) = default;
};

struct SearchReport {
    std::uint64_t count = 0;
    std::optional<std::vector<std::size_t>> positions;  // 1-based, ascending
    std::optional<Instrumentation> comparisons;
};

enum class BlockWidth : unsigned { w8 = 8, w16 = 16, w32 = 32 };

constexpr unsigned lanes(BlockWidth w) noexcept { return static_cast<unsigned>(w); }

inline std::string to_string(BlockWidth w) { return std::to_string(lanes(w)); }

inline std::optional<BlockWidth> width_from_lanes(unsigned n) noexcept {
    switch (n) {
        case 8: return BlockWidth::w8;
        case 16: return BlockWidth::w16;
        case 32: return BlockWidth::w32;
        default: return std::nullopt;
    }
}

/// α-bit equality mask. Bit k refers to alignment block_start + k.
class MatchMask {
public:
    constexpr MatchMask(std::uint32_t bits, BlockWidth width) noexcept
        : bits_(bits & low_bits(width)), width_(width) {}

    constexpr std::uint32_t bits() const noexcept { return bits_; }
    constexpr BlockWidth width() const noexcept { return width_; }
    constexpr bool test(unsigned k) const noexcept { return k < lanes(width_) && ((bits_ >> k) & 1u); }

    static constexpr std::uint32_t low_bits(BlockWidth w) noexcept {
        return lanes(w) == 32 ? 0xFFFFFFFFu : (1u << lanes(w)) - 1u;
    }

    friend constexpr bool operator==(const MatchMask&, const MatchMask&) = default;

private:
    std::uint32_t bits_;
    BlockWidth width_;
};

constexpr unsigned popcount(MatchMask mask) noexcept {
    return static_cast<unsigned>(std::popcount(mask.bits()));
}

/// Brute-force reference: every alignment, byte by byte. Always reports
/// positions. Kept deliberately free of any trick the engines use.
inline SearchReport oracle_count(const Pattern& p, Text t) {
    SearchReport r;
    r.positions.emplace();
    const std::size_t n = t.size();
    const std::size_t m = p.size();
    if (m > n) return r;
    for (std::size_t i = 0; i + m <= n; ++i) {
        std::size_t j = 0;
        while (j < m && t[i + j] == p[j]) ++j;
        if (j == m) {
            ++r.count;
            r.positions->push_back(i + 1);
        }
    }
    return r;
}

}  // namespace blocknaive
