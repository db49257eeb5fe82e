#include <gtest/gtest.h>

#include <random>

#include "blocknaive/block_compare.hpp"
#include "blocknaive/corpus.hpp"
#include "blocknaive/matchers.hpp"
#include "test_support.hpp"

namespace bn = blocknaive;
using bn::testing::bytes_of;

namespace {

const std::vector<bn::BlockWidth>& widths() {
    static const auto w = bn::capability_probe().list();
    return w;
}

bn::SearchConfig block_config(bn::BlockWidth w, bn::ComparisonOrder order = {}, std::size_t r = 1,
                              bn::Mode mode = bn::Mode::reporting) {
    bn::SearchConfig cfg;
    cfg.width = w;
    cfg.order = std::move(order);
    cfg.peel_r = r;
    cfg.mode = mode;
    return cfg;
}

bn::SearchConfig scalar_config(bn::ComparisonOrder order = {}, std::size_t r = 1,
                               bn::Mode mode = bn::Mode::reporting) {
    bn::SearchConfig cfg;
    cfg.order = std::move(order);
    cfg.peel_r = r;
    cfg.mode = mode;
    return cfg;
}

}  // namespace

TEST(BlockSearch, OccurrenceAfterRepeatedFirstByteEveryWidth) {
    for (auto w : widths()) {
        const auto r = bn::block_naive_search(bn::Pattern("abcd"), bn::Text("aabcd"), block_config(w));
        EXPECT_EQ(r.count, 1u);
        EXPECT_EQ(*r.positions, (std::vector<std::size_t>{2}));
    }
}

TEST(BlockSearch, FoundMaskAfterAllSymbolsHasSingleBit) {
    // Pad to exactly one full width-8 block, then AND the per-symbol masks.
    const auto t = bytes_of("aabcdxxxxxx");
    const bn::Pattern p("abcd");
    std::uint32_t found = bn::MatchMask::low_bits(bn::BlockWidth::w8);
    for (std::size_t j = 1; j <= 4; ++j) found &= bn::block_compare(bn::Text(t), 1, p, j, bn::BlockWidth::w8).bits();
    EXPECT_EQ(found, 0b10u);
    EXPECT_EQ(bn::extract_positions(bn::MatchMask(found, bn::BlockWidth::w8), 1), (std::vector<std::size_t>{2}));
    EXPECT_EQ(*bn::block_naive_search(p, bn::Text(t), block_config(bn::BlockWidth::w8)).positions,
              (std::vector<std::size_t>{2}));
}

TEST(BlockSearch, SmallExamples) {
    for (auto w : widths()) {
        EXPECT_EQ(bn::block_naive_search(bn::Pattern("a"), bn::Text("a"), block_config(w)).count, 1u);
        const auto r = bn::block_naive_search(bn::Pattern("aa"), bn::Text("aaaa"), block_config(w));
        EXPECT_EQ(*r.positions, (std::vector<std::size_t>{1, 2, 3}));
        EXPECT_EQ(bn::block_naive_search(bn::Pattern("abc"), bn::Text(""), block_config(w)).count, 0u);
        EXPECT_EQ(bn::block_naive_search(bn::Pattern("abc"), bn::Text("ab"), block_config(w)).count, 0u);
    }
}

TEST(ExtractPositions, Examples) {
    EXPECT_EQ(bn::extract_positions(bn::MatchMask(0b1010, bn::BlockWidth::w8), 5), (std::vector<std::size_t>{6, 8}));
    EXPECT_TRUE(bn::extract_positions(bn::MatchMask(0, bn::BlockWidth::w32), 1).empty());
    EXPECT_EQ(bn::extract_positions(bn::MatchMask(0x80000001u, bn::BlockWidth::w32), 10),
              (std::vector<std::size_t>{10, 41}));
}

TEST(BlockSearch, LongRunOfOneSymbol) {
    const std::vector<bn::byte_t> t(1000, 'a');
    for (auto w : widths())
        for (std::size_t m : {1u, 7u, 8u, 9u, 33u, 100u}) {
            const bn::Pattern p(std::vector<bn::byte_t>(m, 'a'));
            for (std::size_t r : {std::size_t{1}, std::size_t{3}, m}) {
                const auto res = bn::block_naive_search(p, bn::Text(t), block_config(w, {}, r));
                ASSERT_EQ(res.count, 1000 - m + 1);
                ASSERT_EQ(res.positions->size(), res.count);
                for (std::size_t k = 0; k < res.count; ++k) ASSERT_EQ((*res.positions)[k], k + 1);
            }
        }
}

TEST(BlockSearch, AbsentLeadingByteBoundsBlockComparisons) {
    std::mt19937_64 rng(3);
    for (auto w : widths()) {
        const std::size_t a = bn::lanes(w);
        for (int iter = 0; iter < 200; ++iter) {
            const std::size_t n = rng() % 3000;
            const std::size_t m = 1 + rng() % 40;
            const auto t = bn::testing::random_bytes(rng, n, 10);  // 'a'..'j'
            auto pv = bn::testing::random_bytes(rng, m, 10);
            pv[0] = 'z';
            for (std::size_t r : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
                bn::SearchConfig cfg = block_config(w, {}, r, bn::Mode::counting);
                cfg.instrument = true;
                const auto res = bn::block_naive_search(bn::Pattern(pv), bn::Text(t), cfg);
                ASSERT_EQ(res.count, 0u);
                const std::size_t alignments = n >= m ? n - m + 1 : 0;
                const std::size_t blocks = (alignments + a - 1) / a;
                ASSERT_LE(res.comparisons->block_comparisons, blocks * std::min(r, m));
            }
        }
    }
}

TEST(BlockSearch, WidthMissingFromAvailableSetIsConfigError) {
    EXPECT_THROW(bn::Matcher(bn::Pattern("ab"), block_config(bn::BlockWidth::w16), bn::WidthSet{bn::BlockWidth::w8}),
                 bn::ConfigError);
}

TEST(Matcher, OrderOfWrongLengthIsConfigError) {
    EXPECT_THROW(bn::Matcher(bn::Pattern("abc"), scalar_config(bn::identity_order(2))), bn::ConfigError);
}

TEST(Matcher, EntryPointsCheckEngineKind) {
    EXPECT_THROW(bn::naive_search(bn::Pattern("a"), bn::Text("a"), block_config(bn::BlockWidth::w8)),
                 bn::ConfigError);
    EXPECT_THROW(bn::block_naive_search(bn::Pattern("a"), bn::Text("a"), scalar_config()), bn::ConfigError);
}

TEST(Matcher, PeelIsClampedToPatternLength) {
    const bn::Matcher m(bn::Pattern("abc"), scalar_config({}, 10));
    EXPECT_EQ(m.config().peel_r, 3u);
    const bn::Matcher z(bn::Pattern("abc"), scalar_config({}, 0));
    EXPECT_EQ(z.config().peel_r, 1u);
}

TEST(Matcher, CountingModeHasNoPositions) {
    const auto r = bn::naive_search(bn::Pattern("a"), bn::Text("aaa"), scalar_config({}, 1, bn::Mode::counting));
    EXPECT_EQ(r.count, 3u);
    EXPECT_FALSE(r.positions.has_value());
    EXPECT_FALSE(r.comparisons.has_value());
}

TEST(ScalarSearch, ComparisonCountOnKnownInput) {
    // "ab" in "aab": alignment 1 checks a==a, a!=b (2); alignment 2 checks a, b (2).
    bn::SearchConfig cfg = scalar_config({}, 1, bn::Mode::counting);
    cfg.instrument = true;
    const auto r = bn::naive_search(bn::Pattern("ab"), bn::Text("aab"), cfg);
    EXPECT_EQ(r.count, 1u);
    EXPECT_EQ(r.comparisons->symbol_comparisons, 4u);
}

TEST(DefaultPeel, Policy) {
    using bn::OrderKind;
    EXPECT_EQ(bn::default_peel_factor(OrderKind::identity, 4), 5u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::frequency, 4), 5u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::pi_h, 2), 5u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::frequency, 63), 2u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::frequency, 33), 2u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::frequency, 32), 3u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::frequency, 19), 3u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::identity, 63), 3u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::pi_h, 117), 3u);
    EXPECT_EQ(bn::default_peel_factor(OrderKind::pi_hs, 19), 3u);
}

// Property: every engine configuration reports exactly the occurrences found
// by direct definition, for random texts with planted matches.
TEST(Differential, AllConfigurationsAgreeWithDefinition) {
    std::mt19937_64 rng(2024);
    const unsigned alphabets[] = {1, 2, 4, 19, 63, 117, 256};
    for (int iter = 0; iter < 600; ++iter) {
        const unsigned sigma = alphabets[rng() % std::size(alphabets)];
        const std::size_t n = rng() % 700;
        const std::size_t m = 1 + rng() % 70;
        auto t = bn::testing::random_bytes(rng, n, sigma);
        const auto pv = bn::testing::random_bytes(rng, m, sigma);
        bn::testing::plant(rng, t, pv, rng() % 4);
        const bn::Pattern p(pv);
        const auto expected = bn::testing::occurrences_by_definition(t, pv);

        bn::FrequencyTable table;
        table.add(t);
        for (auto kind : {bn::OrderKind::identity, bn::OrderKind::frequency, bn::OrderKind::pi_h,
                          bn::OrderKind::pi_hs}) {
            const auto order = bn::make_order(kind, p, &table, bn::testing::symbol(0, sigma));
            for (std::size_t r : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{5}, m}) {
                const auto s = bn::naive_search(p, bn::Text(t), scalar_config(order, r));
                ASSERT_EQ(*s.positions, expected) << "scalar sigma=" << sigma << " n=" << n << " m=" << m;
                for (auto w : widths()) {
                    const auto rep = bn::block_naive_search(p, bn::Text(t), block_config(w, order, r));
                    ASSERT_EQ(*rep.positions, expected)
                        << "w=" << bn::lanes(w) << " order=" << bn::to_string(kind) << " r=" << r << " n=" << n
                        << " m=" << m;
                    const auto cnt =
                        bn::block_naive_search(p, bn::Text(t), block_config(w, order, r, bn::Mode::counting));
                    ASSERT_EQ(cnt.count, expected.size());
                }
            }
        }
    }
}

TEST(Differential, InstrumentationDoesNotChangeResults) {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        auto t = bn::testing::random_bytes(rng, rng() % 500, 3);
        const auto pv = bn::testing::random_bytes(rng, 1 + rng() % 9, 3);
        const std::size_t r = 1 + rng() % 6;
        for (auto w : widths()) {
            auto cfg = block_config(w, bn::pi_h_order(pv.size()), r);
            const auto plain = bn::block_naive_search(bn::Pattern(pv), bn::Text(t), cfg);
            cfg.instrument = true;
            const auto inst = bn::block_naive_search(bn::Pattern(pv), bn::Text(t), cfg);
            ASSERT_EQ(*plain.positions, *inst.positions);
        }
    }
}

// Text lengths around multiples of the block width exercise the seam between
// full blocks and the scalar tail.
TEST(Differential, BlockTailSeam) {
    std::mt19937_64 rng(8);
    for (auto w : widths()) {
        const std::size_t a = bn::lanes(w);
        for (std::size_t m : {1u, 2u, 3u, 8u, 17u}) {
            for (std::size_t blocks = 0; blocks <= 3; ++blocks)
                for (std::size_t extra = 0; extra < a; ++extra) {
                    const std::size_t n = blocks * a + extra + m - 1;
                    auto t = bn::testing::random_bytes(rng, n, 2);
                    const auto pv = bn::testing::random_bytes(rng, m, 2);
                    // put an occurrence at the last alignment
                    if (n >= m) std::copy(pv.begin(), pv.end(), t.end() - m);
                    const auto got = bn::block_naive_search(bn::Pattern(pv), bn::Text(t),
                                                            block_config(w, bn::pi_h_order(m), 1 + m % 3));
                    ASSERT_EQ(*got.positions, bn::testing::occurrences_by_definition(t, pv))
                        << "w=" << a << " n=" << n << " m=" << m;
                }
        }
    }
}

TEST(ScalarSearch, FewComparisonsPerPositionOnProse) {
    const auto corpus = bn::load_corpus(bn::testing::fixture("english63.txt"));
    const auto set = bn::sample_patterns(corpus, 8, 20, 1);
    std::uint64_t total = 0;
    for (const auto& p : set.patterns) {
        bn::SearchConfig cfg = scalar_config({}, 1, bn::Mode::counting);
        cfg.instrument = true;
        total += bn::naive_search(p, corpus.text(), cfg).comparisons->symbol_comparisons;
    }
    const double per_position = static_cast<double>(total) / (20.0 * static_cast<double>(corpus.size() - 7));
    EXPECT_GE(per_position, 1.0);
    EXPECT_LE(per_position, 1.2);
}
