// Regenerates the checked-in test corpora under tests/fixtures.
//
//   make_fixtures <output-dir>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "blocknaive/corpus.hpp"
#include "blocknaive/synthetic.hpp"

namespace bn = blocknaive;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    constexpr std::size_t kSize = 64 * 1024;
    struct Fixture {
        const char* name;
        std::vector<bn::byte_t> bytes;
        std::size_t expected_alphabet;
    };
    const Fixture fixtures[] = {
        {"dna4.txt", bn::synth::dna_like(kSize, 4), 4},
        {"protein19.txt", bn::synth::protein_like(kSize, 19), 19},
        {"english63.txt", bn::synth::english_like(kSize, 63), 63},
        {"wide117.txt", bn::synth::wide_prose(kSize, 117), 117},
    };

    int status = 0;
    for (const auto& f : fixtures) {
        std::ofstream os(dir / f.name, std::ios::binary);
        os.write(reinterpret_cast<const char*>(f.bytes.data()), static_cast<std::streamsize>(f.bytes.size()));
        const std::size_t sigma = bn::alphabet_size(bn::Text(f.bytes));
        std::printf("%-14s %zu bytes, alphabet %zu\n", f.name, f.bytes.size(), sigma);
        if (sigma != f.expected_alphabet) {
            std::fprintf(stderr, "%s: expected alphabet %zu\n", f.name, f.expected_alphabet);
            status = 1;
        }
    }
    return status;
}
