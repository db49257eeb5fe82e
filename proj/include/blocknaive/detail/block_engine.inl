// Block engine body. Included once per instruction set, inside a namespace
// that defines `Kernel` and inside the matching target region. Must not
// include headers.

/// Runs full blocks of Kernel::kLanes alignments starting at alignment 0 and
/// returns the first alignment not covered. A block at alignment i is safe
/// when i + lanes + m - 1 <= n, so no byte past the text is ever read.
template <bool Report, bool Instrument, std::size_t Peel>
inline std::size_t block_range(const EngineArgs& a, EngineState& s) {
    constexpr std::size_t kLanes = Kernel::kLanes;
    constexpr std::uint32_t kAll = MatchMask::low_bits(Kernel::kWidth);
    const std::size_t peel = Peel != 0 ? Peel : a.peel;
    const std::size_t m = a.m;
    const std::uint32_t* order = a.order;
    const byte_t* bytes = a.ordered_bytes;

    if (a.n + 1 < m + kLanes) return 0;
    const std::size_t last = a.n + 1 - m - kLanes;

    std::size_t i = 0;
    for (; i <= last; i += kLanes) {
        const byte_t* base = a.text + i;
        std::uint32_t found;
        std::size_t j;
        if (peel == 1) {
            found = kAll;
            j = 0;
        } else {
            found = Kernel::compare(base + order[0], bytes[0]);
            for (j = 1; j < peel; ++j) found &= Kernel::compare(base + order[j], bytes[j]);
            if constexpr (Instrument) s.work.block_comparisons += peel;
            if (found == 0) continue;
        }
        for (; j < m; ++j) {
            found &= Kernel::compare(base + order[j], bytes[j]);
            if constexpr (Instrument) ++s.work.block_comparisons;
            if (found == 0) break;
        }
        if (found == 0) continue;
        s.count += Kernel::popcount(found);
        if constexpr (Report) append_positions(found, i + 1, *s.positions);
    }
    return i;
}

template <bool Report>
inline std::size_t block_range_fixed_peel(const EngineArgs& a, EngineState& s) {
    switch (a.peel) {
        case 1: return block_range<Report, false, 1>(a, s);
        case 2: return block_range<Report, false, 2>(a, s);
        case 3: return block_range<Report, false, 3>(a, s);
        case 4: return block_range<Report, false, 4>(a, s);
        case 5: return block_range<Report, false, 5>(a, s);
        default: return block_range<Report, false, 0>(a, s);
    }
}

inline void search(const EngineArgs& a, bool report, bool instrument, EngineState& s) {
    std::size_t next;
    if (instrument)
        next = report ? block_range<true, true, 0>(a, s) : block_range<false, true, 0>(a, s);
    else
        next = report ? block_range_fixed_peel<true>(a, s) : block_range_fixed_peel<false>(a, s);
    scalar_search(a, next, report, instrument, s);
}
