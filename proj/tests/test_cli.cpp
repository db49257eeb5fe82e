#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "blocknaive/cli.hpp"
#include "test_support.hpp"

namespace bn = blocknaive;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "blocknaive");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = bn::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("bn_cli_" + std::to_string(counter_++))) {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, std::string_view content) const {
        const auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
    fs::path path() const { return path_; }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

}  // namespace

TEST(CliSearch, CountsOneOccurrence) {
    TempDir d;
    const auto t = d.file("t.txt", "aabcd");
    const auto r = cli({"search", "-p", "abcd", "-t", t});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "1\n");
}

TEST(CliSearch, EmptyTextPrintsZero) {
    TempDir d;
    const auto t = d.file("empty.txt", "");
    EXPECT_EQ(cli({"search", "-p", "abcd", "-t", t}).out, "0\n");
}

TEST(CliSearch, ReportPrintsPositions) {
    TempDir d;
    const auto t = d.file("t.txt", "aabcd");
    EXPECT_EQ(cli({"search", "-p", "abcd", "-t", t, "--report"}).out, "1\n2\n");
    const auto t2 = d.file("t2.txt", "aaaa");
    EXPECT_EQ(cli({"search", "-p", "aa", "-t", t2, "--report", "-a", "naive"}).out, "3\n1\n2\n3\n");
}

TEST(CliSearch, EveryAlgorithmAndOrder) {
    TempDir d;
    const auto t = d.file("t.txt", "the cat sat on the mat with the hat");
    for (const char* algo : {"block", "naive", "sbndm2", "sbndm4"}) {
        const auto r = cli({"search", "-p", "the ", "-t", t, "-a", algo, "--freq-from-text", "--report"});
        EXPECT_EQ(r.out, "3\n1\n16\n29\n") << algo << r.err;
    }
    for (const char* order : {"identity", "freq", "pih", "pihs"})
        for (const char* width : {"auto", "8"})
            EXPECT_EQ(cli({"search", "-p", "at", "-t", t, "-o", order, "-w", width, "--freq-from-text"}).out, "4\n")
                << order;
}

TEST(CliSearch, HexPatternAndPatternFile) {
    TempDir d;
    const auto t = d.file("t.bin", std::string("\x00\xff\x00\x00\xff", 5));
    EXPECT_EQ(cli({"search", "-p", "00ff", "--hex", "-t", t, "--report"}).out, "2\n1\n4\n");
    const auto pf = d.file("p.txt", "00 FF\n");
    EXPECT_EQ(cli({"search", "--pattern-file", pf, "--hex", "-t", t}).out, "2\n");
    const auto raw = d.file("raw.bin", std::string("\xff\x00", 2));
    EXPECT_EQ(cli({"search", "--pattern-file", raw, "-t", t}).out, "1\n");
}

TEST(CliSearch, FrequencyTableFileChangesNothingButOrder) {
    TempDir d;
    const auto t = d.file("t.txt", "abracadabra abracadabra");
    const auto table = (d.path() / "f.txt").string();
    ASSERT_EQ(cli({"freq", "-i", t, "-o", table}).code, 0);
    EXPECT_EQ(cli({"search", "-p", "abra", "-t", t, "--freq-table", table, "--report"}).out, "4\n1\n8\n13\n20\n");
}

TEST(CliSearch, StatsGoToStderr) {
    TempDir d;
    const auto t = d.file("t.txt", "aab");
    const auto r = cli({"search", "-p", "ab", "-t", t, "-a", "naive", "--stats"});
    EXPECT_EQ(r.out, "1\n");
    EXPECT_NE(r.err.find("symbol_comparisons 4"), std::string::npos) << r.err;
}

TEST(CliSearch, UsageErrorsExitTwo) {
    TempDir d;
    const auto t = d.file("t.txt", "abc");
    EXPECT_EQ(cli({"search", "-p", "a"}).code, 2);                                       // no text
    EXPECT_EQ(cli({"search", "-t", t}).code, 2);                                         // no pattern
    EXPECT_EQ(cli({"search", "-p", "a", "-t", t, "-o", "freq"}).code, 2);                // no table
    EXPECT_EQ(cli({"search", "-p", "a", "-t", t, "-w", "64"}).code, 2);                  // bad width
    EXPECT_EQ(cli({"search", "-p", "a", "-t", t, "-a", "sbndm2"}).code, 2);              // m < q
    EXPECT_EQ(cli({"search", "-p", "abc", "--hex", "-t", t}).code, 2);                   // odd hex
    EXPECT_EQ(cli({"search", "-p", "zz", "--hex", "-t", t}).code, 2);                    // bad hex
    EXPECT_EQ(cli({"search", "-p", "a", "-t", t, "--freq-table", t, "--freq-from-text"}).code, 2);
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
}

TEST(CliSearch, IoErrorsExitOne) {
    TempDir d;
    const auto t = d.file("t.txt", "abc");
    const auto bad_table = d.file("bad.txt", "not a table\n");
    EXPECT_EQ(cli({"search", "-p", "a", "-t", "/no/such/file"}).code, 1);
    EXPECT_EQ(cli({"search", "-p", "a", "-t", t, "--freq-table", "/no/such/table"}).code, 1);
    EXPECT_EQ(cli({"search", "-p", "a", "-t", t, "--freq-table", bad_table}).code, 1);
    EXPECT_EQ(cli({"search", "--pattern-file", "/no/such/pattern", "-t", t}).code, 1);
    EXPECT_EQ(cli({"freq", "-i", "/no/such/file"}).code, 1);
}

TEST(CliFreq, WritesAllByteValues) {
    TempDir d;
    const auto t = d.file("t.txt", "aab");
    const auto r = cli({"freq", "-i", t});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    const auto table = bn::read_frequency_table(in);
    EXPECT_EQ(table.count('a'), 2u);
    EXPECT_EQ(table.count('b'), 1u);
    EXPECT_EQ(table.total(), 3u);
}

TEST(CliProbe, ListsWidths) {
    const auto r = cli({"probe"});
    EXPECT_EQ(r.code, 0);
    std::string expected;
    for (auto w : bn::capability_probe().list()) expected += std::to_string(bn::lanes(w)) + "\n";
    EXPECT_EQ(r.out, expected);
    EXPECT_EQ(r.out.substr(0, 2), "8\n");
}

TEST(CliBench, SmallRunWritesCsvAndPlots) {
    TempDir d;
    const auto csv = (d.path() / "out.csv").string();
    const auto plots = (d.path() / "plots").string();
    const auto r = cli({"bench", "-c", bn::testing::fixture("dna4.txt").string(), "-c",
                        bn::testing::fixture("protein19.txt").string(), "-a", "naive,N8-fixed,SBNDM2", "-m", "4,8",
                        "--runs", "2", "--seed", "7", "-o", csv, "--plot-dir", plots});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("sampler mt19937_64 seed 7"), std::string::npos);
    std::ifstream in(csv);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    ASSERT_EQ(lines.size(), 1u + 2 * 2 * 3);
    EXPECT_EQ(lines[0], bn::kCsvHeader);
    EXPECT_TRUE(fs::exists(fs::path(plots) / "dna4.txt.dat"));
    EXPECT_TRUE(fs::exists(fs::path(plots) / "protein19.txt.dat"));
}

TEST(CliBench, UnknownAlgorithmIsUsageError) {
    EXPECT_EQ(cli({"bench", "-c", bn::testing::fixture("dna4.txt").string(), "-a", "N64"}).code, 2);
    EXPECT_EQ(cli({"bench", "-c", "/no/such/corpus"}).code, 1);
}

// End-to-end: random files and patterns through the CLI against the definition.
TEST(CliSearch, RandomisedAgainstDefinition) {
    TempDir d;
    std::mt19937_64 rng(12);
    const char* algos[] = {"block", "naive", "sbndm2", "sbndm4"};
    const char* orders[] = {"identity", "freq", "pih", "pihs"};
    const char* widths[] = {"auto", "8", "16", "32"};
    const auto available = bn::capability_probe();
    for (int iter = 0; iter < 150; ++iter) {
        const unsigned sigma = 2 + static_cast<unsigned>(rng() % 30);
        auto t = bn::testing::random_bytes(rng, rng() % 2000, sigma);
        const auto pv = bn::testing::random_bytes(rng, 4 + rng() % 20, sigma);
        bn::testing::plant(rng, t, pv, 3);
        const auto tf = d.file("t.txt", std::string(t.begin(), t.end()));
        const auto pf = d.file("p.txt", std::string(pv.begin(), pv.end()));

        const char* width = widths[rng() % 4];
        if (std::string(width) != "auto" &&
            !available.contains(*bn::width_from_lanes(static_cast<unsigned>(std::stoul(width)))))
            width = "8";
        const auto r = cli({"search", "--pattern-file", pf, "-t", tf, "-a", algos[rng() % 4], "-o",
                            orders[rng() % 4], "-w", width, "-r", std::to_string(rng() % 7), "--freq-from-text",
                            "--report"});
        ASSERT_EQ(r.code, 0) << r.err;
        std::string expected;
        const auto occ = bn::testing::occurrences_by_definition(t, pv);
        expected += std::to_string(occ.size()) + "\n";
        for (auto p : occ) expected += std::to_string(p) + "\n";
        ASSERT_EQ(r.out, expected);
    }
}
