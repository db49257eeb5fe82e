#pragma once

// Naive exact matching engines.
//
// One parametric engine covers the whole family: a scalar byte-at-a-time
// search and a block search that tests α consecutive alignments at once by
// AND-ing width-α equality masks. Both follow an arbitrary comparison order
// and a peeling factor r: the first r comparisons of an alignment (or block)
// run unconditionally before the first early-exit test.
//
// Block search covers the longest prefix of alignments whose reads stay in
// bounds; the remaining alignments go through the scalar engine with the same
// order and r. No padding and no over-read.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blocknaive/block_compare.hpp"
#include "blocknaive/core.hpp"
#include "blocknaive/orders.hpp"

namespace blocknaive {

struct SearchConfig {
    std::optional<BlockWidth> width;  // empty: scalar engine
    ComparisonOrder order;            // empty: identity
    std::size_t peel_r = 1;
    Mode mode = Mode::counting;
    bool instrument = false;
};

namespace detail {

struct EngineArgs {
    const byte_t* text;
    std::size_t n;
    std::size_t m;
    const std::uint32_t* order;   // 0-based pattern offsets in check order
    const byte_t* ordered_bytes;  // pattern bytes in check order
    std::size_t peel;             // 1..m
};

struct EngineState {
    std::uint64_t count = 0;
    std::vector<std::size_t>* positions = nullptr;
    Instrumentation work;
};

/// Appends first + k for each set bit k of found, ascending.
inline void append_positions(std::uint32_t found, std::size_t first, std::vector<std::size_t>& out) {
    while (found != 0) {
        out.push_back(first + static_cast<std::size_t>(std::countr_zero(found)));
        found &= found - 1;
    }
}

template <bool Report, bool Instrument>
inline void scalar_range(const EngineArgs& a, std::size_t first, EngineState& s) {
    if (a.n < a.m) return;
    const std::size_t end = a.n - a.m + 1;
    for (std::size_t i = first; i < end; ++i) {
        const byte_t* base = a.text + i;
        bool found = true;
        std::size_t j = 0;
        for (; j < a.peel; ++j) found &= base[a.order[j]] == a.ordered_bytes[j];
        if constexpr (Instrument) s.work.symbol_comparisons += a.peel;
        if (!found) continue;
        for (; j < a.m; ++j) {
            if constexpr (Instrument) ++s.work.symbol_comparisons;
            if (base[a.order[j]] != a.ordered_bytes[j]) {
                found = false;
                break;
            }
        }
        if (!found) continue;
        ++s.count;
        if constexpr (Report) s.positions->push_back(i + 1);
    }
}

inline void scalar_search(const EngineArgs& a, std::size_t first, bool report, bool instrument, EngineState& s) {
    if (report)
        instrument ? scalar_range<true, true>(a, first, s) : scalar_range<true, false>(a, first, s);
    else
        instrument ? scalar_range<false, true>(a, first, s) : scalar_range<false, false>(a, first, s);
}

namespace portable {
using Kernel = PortableKernel;
#include "blocknaive/detail/block_engine.inl"
}  // namespace portable

}  // namespace detail
}  // namespace blocknaive

#if BLOCKNAIVE_X86
BLOCKNAIVE_BEGIN_SSE2
namespace blocknaive::detail::sse2 {
using Kernel = Sse2Kernel;
#include "blocknaive/detail/block_engine.inl"
}  // namespace blocknaive::detail::sse2
BLOCKNAIVE_END_TARGET

BLOCKNAIVE_BEGIN_AVX2
namespace blocknaive::detail::avx2 {
using Kernel = Avx2Kernel;
#include "blocknaive/detail/block_engine.inl"
}  // namespace blocknaive::detail::avx2
BLOCKNAIVE_END_TARGET
#endif

namespace blocknaive {

/// Default peeling factor: r = 5 on alphabets of at most 4 symbols, r = 2 for
/// frequency order on alphabets larger than 32, r = 3 otherwise.
constexpr std::size_t default_peel_factor(OrderKind order, std::size_t alphabet_size) noexcept {
    if (alphabet_size <= 4) return 5;
    if (order == OrderKind::frequency && alphabet_size > 32) return 2;
    return 3;
}

/// Positions block_start + k (1-based) of the set bits of found, ascending.
inline std::vector<std::size_t> extract_positions(MatchMask found, std::size_t block_start) {
    std::vector<std::size_t> out;
    detail::append_positions(found.bits(), block_start, out);
    return out;
}

/// A pattern bound to a validated search configuration. Construction fails
/// with ConfigError on an unavailable width or an order of the wrong size;
/// search() itself never fails. Immutable, so one instance may be shared.
class Matcher {
public:
    Matcher(Pattern pattern, SearchConfig config, WidthSet available = capability_probe())
        : pattern_(std::move(pattern)), config_(std::move(config)) {
        const std::size_t m = pattern_.size();
        if (config_.order.empty()) config_.order = identity_order(m);
        if (config_.order.size() != m)
            throw ConfigError("comparison order has " + std::to_string(config_.order.size()) +
                              " positions, pattern has " + std::to_string(m));
        if (config_.width && !available.contains(*config_.width))
            throw ConfigError("block width " + to_string(*config_.width) + " is not available on this machine");
        config_.peel_r = std::clamp<std::size_t>(config_.peel_r, 1, m);

        offsets_.reserve(m);
        ordered_bytes_.reserve(m);
        for (std::uint32_t pos : config_.order) {
            offsets_.push_back(pos - 1);
            ordered_bytes_.push_back(pattern_[pos - 1]);
        }
    }

    const Pattern& pattern() const noexcept { return pattern_; }
    const SearchConfig& config() const noexcept { return config_; }

    SearchReport search(Text t) const {
        SearchReport report;
        detail::EngineState state;
        const bool reporting = config_.mode == Mode::reporting;
        if (reporting) state.positions = &report.positions.emplace();

        const detail::EngineArgs args{t.data(),      t.size(),           pattern_.size(),
                                      offsets_.data(), ordered_bytes_.data(), config_.peel_r};
        if (!config_.width) {
            detail::scalar_search(args, 0, reporting, config_.instrument, state);
        } else {
            switch (*config_.width) {
                case BlockWidth::w8: detail::portable::search(args, reporting, config_.instrument, state); break;
#if BLOCKNAIVE_X86
                case BlockWidth::w16: detail::sse2::search(args, reporting, config_.instrument, state); break;
                case BlockWidth::w32: detail::avx2::search(args, reporting, config_.instrument, state); break;
#endif
                default: throw ConfigError("block width not compiled into this build");
            }
        }

        report.count = state.count;
        if (config_.instrument) report.comparisons = state.work;
        return report;
    }

private:
    Pattern pattern_;
    SearchConfig config_;
    std::vector<std::uint32_t> offsets_;
    std::vector<byte_t> ordered_bytes_;
};

/// Scalar search; cfg.width must be empty.
inline SearchReport naive_search(const Pattern& p, Text t, const SearchConfig& cfg) {
    if (cfg.width) throw ConfigError("naive_search requires the scalar engine (no block width)");
    return Matcher(p, cfg).search(t);
}

/// Block search; cfg.width must name an available width.
inline SearchReport block_naive_search(const Pattern& p, Text t, const SearchConfig& cfg) {
    if (!cfg.width) throw ConfigError("block_naive_search requires a block width");
    return Matcher(p, cfg).search(t);
}

}  // namespace blocknaive
