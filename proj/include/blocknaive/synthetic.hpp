#pragma once

// Deterministic synthetic texts standing in for the benchmark corpora when
// the real files are not around: English-like prose (63 symbols), a wider
// Latin-2-like prose (117 symbols), protein-like (19) and DNA-like (4)
// sequences, and uniform random text over any alphabet size.
//
// Prose is built from a frequency-ranked English word list with Zipf weights,
// so letter statistics and adjacent-letter correlation resemble real text.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blocknaive/core.hpp"
#include "blocknaive/corpus.hpp"

namespace blocknaive::synth {

namespace detail {

// Ranked by rough frequency in running English text.
inline constexpr std::array<std::string_view, 200> kWords = {
    "the",     "of",      "and",     "to",      "in",       "a",       "that",    "he",      "it",      "was",
    "for",     "his",     "is",      "with",    "as",       "unto",    "be",      "shall",   "they",    "not",
    "him",     "on",      "had",     "i",       "at",       "by",      "all",     "this",    "but",     "from",
    "have",    "which",   "you",     "were",    "said",     "them",    "their",   "there",   "one",     "we",
    "her",     "she",     "when",    "so",      "my",       "will",    "or",      "an",      "me",      "would",
    "out",     "up",      "then",    "into",    "what",     "came",    "are",     "man",     "who",     "upon",
    "no",      "more",    "people",  "if",      "been",     "do",      "king",    "land",    "house",   "great",
    "day",     "over",    "made",    "before",  "after",    "could",   "time",    "went",    "should",  "only",
    "know",    "now",     "our",     "also",    "down",     "god",     "your",    "like",    "first",   "about",
    "men",     "hand",    "because", "against", "us",       "every",   "may",     "these",   "other",   "put",
    "city",    "even",    "some",    "son",     "away",     "thing",   "say",     "things",  "through", "never",
    "children","where",   "how",     "good",    "old",      "long",    "water",   "sons",    "name",    "again",
    "saw",     "place",   "two",     "while",   "world",    "make",    "still",   "own",     "take",    "give",
    "way",     "under",   "life",    "night",   "yet",      "heart",   "brought", "words",   "just",    "voice",
    "quite",   "next",    "quiet",   "question","quickly",  "zeal",    "size",    "amazed",  "jewel",   "journey",
    "joy",     "judge",   "oxen",    "box",     "six",      "exceed",  "knew",    "kingdom", "keep",    "very",
    "seven",   "voices",  "vision",  "fear",    "father",   "mother",  "brother", "light",   "morning", "evening",
    "spirit",  "truth",   "wisdom",  "field",   "bread",    "wine",    "gold",    "silver",  "mountain","river",
    "well-known","don't", "it's",    "o'er",    "half-way", "strength","mighty",  "whom",    "whose",   "why",
    "dwell",   "walked",  "speak",   "spake",   "behold",   "return",  "bring",   "build",   "built",   "burnt",
};

// One name per initial letter so every upper-case letter occurs.
inline constexpr std::array<std::string_view, 26> kNames = {
    "Aaron", "Benjamin", "Caleb",  "David", "Eli",    "Felix", "Gideon",  "Hannah", "Isaac",
    "Jacob", "Kish",     "Levi",   "Moses", "Naomi",  "Obed",  "Peter",   "Quintus", "Ruth",
    "Simon", "Timothy",  "Uriah",  "Vashti", "Walter", "Xerxes", "Yael",  "Zadok",
};

class Prose {
public:
    explicit Prose(std::uint64_t seed) : rng_(seed) {
        std::uint64_t acc = 0;
        for (std::size_t r = 0; r < kWords.size(); ++r) {
            acc += 100000 / (r + 2);
            cumulative_[r] = acc;
        }
    }

    bool chance(unsigned per_mille) { return blocknaive::detail::uniform_below(rng_, 1000) < per_mille; }
    std::uint64_t below(std::uint64_t n) { return blocknaive::detail::uniform_below(rng_, n); }

    std::string_view word() {
        if (chance(40)) return kNames[below(kNames.size())];
        const std::uint64_t x = below(cumulative_.back());
        std::size_t lo = 0;
        while (cumulative_[lo] <= x) ++lo;
        return kWords[lo];
    }

    /// Appends sentences until out reaches n bytes, then truncates to n.
    /// `decorate` may rewrite each emitted word in place.
    template <class Decorate>
    void write(std::vector<byte_t>& out, std::size_t n, Decorate&& decorate) {
        std::size_t column = 0;
        std::string buf;
        auto emit = [&](std::string_view s) {
            for (char ch : s) out.push_back(static_cast<byte_t>(ch));
            column += s.size();
        };
        while (out.size() < n) {
            const std::size_t words = 4 + below(16);
            bool paren = false;
            for (std::size_t w = 0; w < words; ++w) {
                buf.assign(word());
                if (w == 0 && buf[0] >= 'a' && buf[0] <= 'z') buf[0] = static_cast<char>(buf[0] - 'a' + 'A');
                decorate(buf);
                if (w > 0) {
                    if (column > 70) {
                        out.push_back('\n');
                        column = 0;
                    } else {
                        emit(" ");
                    }
                }
                if (!paren && w > 0 && w + 2 < words && chance(15)) {
                    emit("(");
                    paren = true;
                }
                emit(buf);
                if (paren && chance(300)) {
                    emit(")");
                    paren = false;
                }
                if (w + 1 < words && chance(70)) emit(",");
                else if (w + 1 < words && chance(8)) emit(";");
            }
            if (paren) emit(")");
            const unsigned end = static_cast<unsigned>(below(100));
            emit(end < 88 ? "." : end < 95 ? "!" : "?");
            if (column > 70) {
                out.push_back('\n');
                column = 0;
            } else {
                emit(" ");
            }
        }
        out.resize(n);
    }

private:
    std::mt19937_64 rng_;
    std::array<std::uint64_t, kWords.size()> cumulative_{};
};

inline std::vector<byte_t> weighted(std::size_t n, std::uint64_t seed, std::string_view symbols,
                                    std::span<const unsigned> weights) {
    std::mt19937_64 rng(seed);
    std::vector<unsigned> cumulative(weights.size());
    unsigned acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) cumulative[i] = acc += weights[i];
    std::vector<byte_t> out(n);
    for (auto& b : out) {
        const auto x = blocknaive::detail::uniform_below(rng, acc);
        std::size_t k = 0;
        while (cumulative[k] <= x) ++k;
        b = static_cast<byte_t>(symbols[k]);
    }
    return out;
}

}  // namespace detail

/// English-like prose over 63 symbols: letters, space, newline and .,;!?'-()
inline std::vector<byte_t> english_like(std::size_t n, std::uint64_t seed) {
    std::vector<byte_t> out;
    out.reserve(n + 256);
    detail::Prose prose(seed);
    prose.write(out, n, [](std::string&) {});
    return out;
}

/// Prose over 117 symbols: the English-like set plus digits and 44 bytes from
/// 0xC1..0xEC standing in for accented letters.
inline std::vector<byte_t> wide_prose(std::size_t n, std::uint64_t seed) {
    std::vector<byte_t> out;
    out.reserve(n + 256);
    detail::Prose prose(seed);
    std::mt19937_64 aux(blocknaive::detail::mix_seed(seed));
    prose.write(out, n, [&](std::string& w) {
        for (char& ch : w)
            if (ch >= 'a' && ch <= 'z' && blocknaive::detail::uniform_below(aux, 100) < 7)
                ch = static_cast<char>(0xC1 + blocknaive::detail::uniform_below(aux, 44));
        if (blocknaive::detail::uniform_below(aux, 100) < 3) {
            w += ' ';
            const auto digits = 1 + blocknaive::detail::uniform_below(aux, 3);
            for (std::uint64_t d = 0; d < digits; ++d)
                w += static_cast<char>('0' + blocknaive::detail::uniform_below(aux, 10));
        }
    });
    return out;
}

/// Amino-acid-like sequence over 19 letters with skewed frequencies.
inline std::vector<byte_t> protein_like(std::size_t n, std::uint64_t seed) {
    static constexpr std::array<unsigned, 19> kWeights = {70, 23, 47, 71, 37, 66, 26, 44, 57, 99,
                                                          21, 36, 63, 48, 56, 83, 53, 60, 12};
    return detail::weighted(n, seed, "ACDEFGHIKLMNPQRSTVW", kWeights);
}

/// Nearly uniform sequence over ACGT.
inline std::vector<byte_t> dna_like(std::size_t n, std::uint64_t seed) {
    static constexpr std::array<unsigned, 4> kWeights = {246, 254, 254, 246};
    return detail::weighted(n, seed, "ACGT", kWeights);
}

/// Uniform random text over sigma symbols: 'a'.. for sigma <= 26, else bytes 0..sigma-1.
inline std::vector<byte_t> uniform_text(std::size_t n, unsigned sigma, std::uint64_t seed) {
    if (sigma < 1 || sigma > 256) throw std::invalid_argument("uniform_text: sigma must be in 1..256");
    std::mt19937_64 rng(seed);
    std::vector<byte_t> out(n);
    const unsigned base = sigma <= 26 ? 'a' : 0;
    for (auto& b : out) b = static_cast<byte_t>(base + blocknaive::detail::uniform_below(rng, sigma));
    return out;
}

}  // namespace blocknaive::synth
