#pragma once

// SBNDMq (simplified backward nondeterministic DAWG matching with a q-gram
// start), q = 2 or 4. Used as the bit-parallel competitor in benchmarks.
//
// Window of m' = min(m, 64) bytes ending at e. The window is read right to
// left; D tracks which pattern positions the suffix read so far can start at.
// Mask convention: bit k of B[c] is set iff p[m'-1-k] == c (0-based), so bit 0
// is the last pattern byte and bit m'-1 the first. The first q bytes are read
// unconditionally; if D dies after j bytes the window moves by m' - j + 1
// (m' - q + 1 for the q-gram). Surviving m' bytes means an occurrence of the
// m'-prefix; longer patterns are then verified byte-wise. After an occurrence
// the window moves by the smallest period of the prefix.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "blocknaive/core.hpp"

namespace blocknaive {

inline constexpr std::size_t kBndmWordBits = 64;

struct BndmTables {
    std::array<std::uint64_t, 256> masks{};
    std::size_t prefix_len = 0;  // m'
};

inline BndmTables build_bndm_tables(const Pattern& p) {
    BndmTables t;
    t.prefix_len = std::min(p.size(), kBndmWordBits);
    const std::size_t mp = t.prefix_len;
    for (std::size_t i = 0; i < mp; ++i) t.masks[p[i]] |= std::uint64_t{1} << (mp - 1 - i);
    return t;
}

namespace detail {

/// Smallest period of s[0..len).
inline std::size_t smallest_period(const byte_t* s, std::size_t len) {
    std::vector<std::size_t> border(len + 1, 0);
    for (std::size_t i = 1, k = 0; i < len; ++i) {
        while (k > 0 && s[i] != s[k]) k = border[k];
        if (s[i] == s[k]) ++k;
        border[i + 1] = k;
    }
    return len - border[len];
}

}  // namespace detail

class SbndmMatcher {
public:
    SbndmMatcher(Pattern pattern, unsigned q) : pattern_(std::move(pattern)), q_(q) {
        if (q_ != 2 && q_ != 4) throw ConfigError("SBNDM q-gram length must be 2 or 4, got " + std::to_string(q_));
        if (pattern_.size() < q_)
            throw ConfigError("SBNDM" + std::to_string(q_) + " needs a pattern of at least " + std::to_string(q_) +
                              " bytes");
        tables_ = build_bndm_tables(pattern_);
        match_shift_ = detail::smallest_period(pattern_.data(), tables_.prefix_len);
    }

    const Pattern& pattern() const noexcept { return pattern_; }
    unsigned q() const noexcept { return q_; }
    const BndmTables& tables() const noexcept { return tables_; }

    SearchReport search(Text t, Mode mode = Mode::counting) const {
        SearchReport r;
        if (mode == Mode::reporting) {
            r.positions.emplace();
            r.count = run<true, false>(t, &*r.positions, nullptr);
        } else {
            r.count = run<false, false>(t, nullptr, nullptr);
        }
        return r;
    }

    /// Like search(), also recording the 1-based start of every window whose
    /// bytes were examined.
    std::uint64_t search_traced(Text t, std::vector<std::size_t>& windows) const {
        return run<false, true>(t, nullptr, &windows);
    }

private:
    template <bool Report, bool Trace>
    std::uint64_t run(Text t, std::vector<std::size_t>* positions, std::vector<std::size_t>* windows) const {
        const std::size_t n = t.size();
        const std::size_t m = pattern_.size();
        if (n < m) return 0;
        const std::size_t mp = tables_.prefix_len;
        // Last admissible prefix window ends at n - m + mp - 1.
        const std::size_t limit = n - m + mp;
        const byte_t* y = t.data();
        const auto& B = tables_.masks;
        const std::size_t qshift = mp - q_ + 1;

        std::uint64_t count = 0;
        std::size_t e = mp - 1;
        while (e < limit) {
            if constexpr (Trace) windows->push_back(e + 2 - mp);
            std::uint64_t d = B[y[e]];
            for (std::size_t k = 1; k < q_; ++k) d = (d << 1) & B[y[e - k]];
            if (d == 0) {
                e += qshift;
                continue;
            }
            std::size_t j = q_;
            while (j < mp) {
                d = (d << 1) & B[y[e - j]];
                ++j;
                if (d == 0) break;
            }
            if (d == 0) {
                e += mp - j + 1;
                continue;
            }
            const std::size_t start = e + 1 - mp;
            if (mp == m || std::equal(pattern_.data() + mp, pattern_.data() + m, y + start + mp)) {
                ++count;
                if constexpr (Report) positions->push_back(start + 1);
            }
            e += match_shift_;
        }
        return count;
    }

    Pattern pattern_;
    unsigned q_;
    BndmTables tables_;
    std::size_t match_shift_ = 1;
};

inline SearchReport sbndm_search(const Pattern& p, Text t, unsigned q, Mode mode = Mode::counting) {
    return SbndmMatcher(p, q).search(t, mode);
}

}  // namespace blocknaive
