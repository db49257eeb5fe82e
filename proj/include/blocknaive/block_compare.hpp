#pragma once

// Width-α byte-vector comparison: compare α consecutive text bytes against α
// copies of one pattern byte and return the equality mask.
//
// Width 8 is portable (64-bit word arithmetic). Widths 16 and 32 use SSE2 and
// AVX2 and are only offered when capability_probe() reports them.

#include <bit>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocknaive/core.hpp"
#include "blocknaive/detail/target.hpp"

namespace blocknaive {

/// Set of block widths usable on this machine.
class WidthSet {
public:
    constexpr WidthSet() noexcept = default;
    constexpr WidthSet(std::initializer_list<BlockWidth> ws) noexcept {
        for (BlockWidth w : ws) insert(w);
    }

    constexpr void insert(BlockWidth w) noexcept { bits_ |= bit(w); }
    constexpr bool contains(BlockWidth w) const noexcept { return (bits_ & bit(w)) != 0; }

    std::vector<BlockWidth> list() const {
        std::vector<BlockWidth> out;
        for (BlockWidth w : {BlockWidth::w8, BlockWidth::w16, BlockWidth::w32})
            if (contains(w)) out.push_back(w);
        return out;
    }

    /// Widest member; w8 when empty.
    constexpr BlockWidth best() const noexcept {
        if (contains(BlockWidth::w32)) return BlockWidth::w32;
        if (contains(BlockWidth::w16)) return BlockWidth::w16;
        return BlockWidth::w8;
    }

    friend constexpr bool operator==(WidthSet, WidthSet) = default;

private:
    static constexpr unsigned bit(BlockWidth w) noexcept { return lanes(w) >> 3; }
    unsigned bits_ = 0;
};

inline WidthSet capability_probe() noexcept {
    WidthSet s{BlockWidth::w8};
#if BLOCKNAIVE_X86
    __builtin_cpu_init();
    const bool popcnt = __builtin_cpu_supports("popcnt");
    if (popcnt && __builtin_cpu_supports("sse2")) s.insert(BlockWidth::w16);
    if (popcnt && __builtin_cpu_supports("avx2")) s.insert(BlockWidth::w32);
#endif
    return s;
}

namespace detail {

struct PortableKernel {
    static constexpr BlockWidth kWidth = BlockWidth::w8;
    static constexpr std::size_t kLanes = 8;

    static std::uint32_t compare(const byte_t* at, byte_t c) noexcept {
        if constexpr (std::endian::native == std::endian::little) {
            constexpr std::uint64_t kLow7 = 0x7F7F7F7F7F7F7F7FULL;
            std::uint64_t word;
            std::memcpy(&word, at, sizeof word);
            const std::uint64_t x = word ^ (0x0101010101010101ULL * c);
            // high bit of each byte set iff that byte of x is zero
            const std::uint64_t zero = ~(((x & kLow7) + kLow7) | x | kLow7);
            // gather bit 8k+7 into bit k
            return static_cast<std::uint32_t>(((zero >> 7) * 0x0102040810204080ULL) >> 56);
        } else {
            std::uint32_t mask = 0;
            for (unsigned k = 0; k < kLanes; ++k) mask |= static_cast<std::uint32_t>(at[k] == c) << k;
            return mask;
        }
    }

    static unsigned popcount(std::uint32_t x) noexcept { return static_cast<unsigned>(std::popcount(x)); }
};

}  // namespace detail
}  // namespace blocknaive

#if BLOCKNAIVE_X86
BLOCKNAIVE_BEGIN_SSE2
namespace blocknaive::detail {
struct Sse2Kernel {
    static constexpr BlockWidth kWidth = BlockWidth::w16;
    static constexpr std::size_t kLanes = 16;

    static std::uint32_t compare(const byte_t* at, byte_t c) noexcept {
        const __m128i text = _mm_loadu_si128(reinterpret_cast<const __m128i*>(at));
        const __m128i needle = _mm_set1_epi8(static_cast<char>(c));
        return static_cast<std::uint32_t>(_mm_movemask_epi8(_mm_cmpeq_epi8(text, needle)));
    }

    static unsigned popcount(std::uint32_t x) noexcept { return static_cast<unsigned>(__builtin_popcount(x)); }
};

// Out-of-line entry point: callers without the target attribute cannot
// inline the kernel directly.
inline std::uint32_t sse2_compare(const byte_t* at, byte_t c) noexcept { return Sse2Kernel::compare(at, c); }
}  // namespace blocknaive::detail
BLOCKNAIVE_END_TARGET

BLOCKNAIVE_BEGIN_AVX2
namespace blocknaive::detail {
struct Avx2Kernel {
    static constexpr BlockWidth kWidth = BlockWidth::w32;
    static constexpr std::size_t kLanes = 32;

    static std::uint32_t compare(const byte_t* at, byte_t c) noexcept {
        const __m256i text = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(at));
        const __m256i needle = _mm256_set1_epi8(static_cast<char>(c));
        return static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(text, needle)));
    }

    static unsigned popcount(std::uint32_t x) noexcept { return static_cast<unsigned>(__builtin_popcount(x)); }
};

inline std::uint32_t avx2_compare(const byte_t* at, byte_t c) noexcept { return Avx2Kernel::compare(at, c); }
}  // namespace blocknaive::detail
BLOCKNAIVE_END_TARGET
#endif

namespace blocknaive {

/// Equality mask of t[i+j-1 .. i+j-1+α-1] against α copies of p[j].
/// Indices are 1-based. Throws std::out_of_range when the α-byte read window
/// leaves the text and ConfigError when the width is not available here.
inline MatchMask block_compare(Text t, std::size_t i, const Pattern& p, std::size_t j, BlockWidth width,
                               WidthSet available = capability_probe()) {
    const std::size_t a = lanes(width);
    if (i < 1 || j < 1 || j > p.size())
        throw std::out_of_range("block_compare: index out of range");
    const std::size_t start = i + j - 2;  // 0-based first byte read
    if (start + a > t.size())
        throw std::out_of_range("block_compare: read window [" + std::to_string(start + 1) + ", " +
                                std::to_string(start + a) + "] exceeds text length " + std::to_string(t.size()));
    if (!available.contains(width))
        throw ConfigError("block width " + to_string(width) + " is not available on this machine");

    const byte_t* at = t.data() + start;
    const byte_t c = p[j - 1];
    switch (width) {
        case BlockWidth::w8: return {detail::PortableKernel::compare(at, c), width};
#if BLOCKNAIVE_X86
        case BlockWidth::w16: return {detail::sse2_compare(at, c), width};
        case BlockWidth::w32: return {detail::avx2_compare(at, c), width};
#endif
        default: break;
    }
    throw ConfigError("block width " + to_string(width) + " is not compiled into this build");
}

}  // namespace blocknaive
