#include "lzbg/cli.hpp"
#include "lzbg/oracles.hpp"
#include "lzbg/textgen.hpp"
#include "temp_dir.hpp"
#include "test_corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

namespace lzbg {
namespace {

using testing::TempDir;

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

TEST(Cli, FactorizeExampleReportsEightFactors) {
    TempDir dir;
    const std::string in = dir.write("ex.txt", testing::kExample);
    const CliResult r = run({"factorize", "--algo", "bgone-t", "--input", in});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("factors=8"), std::string::npos) << r.out;
}

TEST(Cli, FactorizePrintsFactors) {
    TempDir dir;
    const std::string in = dir.write("ex.txt", testing::kExample);
    for (const char* algo : {"bgone-t", "bgone-sa", "bgtwo", "kkp3-ref"}) {
        const CliResult r = run({"factorize", "--algo", algo, "--input", in, "--print"});
        EXPECT_EQ(r.out, "(0,a)\n(0,b)\n(1,1)\n(3,1)\n(4,5)\n(4,10)\n(1,2)\n(5,5)\n") << algo;
    }
}

TEST(Cli, FactorizeStatsGoToStandardError) {
    TempDir dir;
    const std::string in = dir.write("ex.txt", testing::kExample);
    const CliResult r = run({"factorize", "--input", in, "--stats"});
    ASSERT_EQ(r.code, kExitOk);
    ASSERT_EQ(count_lines(r.err), 2u);
    EXPECT_EQ(r.err.rfind("algo\tn\tfactors\tt_sa_ms\tt_phi_ms\tt_nsv_ms\tt_parse_ms\tt_total_ms\tpeak_aux_words\n", 0), 0u);
    EXPECT_NE(r.err.find("bgone-t\t20\t8\t"), std::string::npos);
}

TEST(Cli, DecodeInvertsFactorize) {
    TempDir dir;
    std::vector<std::string> texts = {testing::kExample, "", "a", textgen::english_like_text(30000, 3),
                                      textgen::random_text(20000, 255, 4)};
    for (std::size_t k = 0; k < texts.size(); ++k) {
        const std::string in = dir.write("t" + std::to_string(k), texts[k]);
        const std::string lz = dir.file("t" + std::to_string(k) + ".lz");
        const std::string back = dir.file("t" + std::to_string(k) + ".out");
        for (const char* algo : {"bgone-t", "bgone-sa", "bgtwo", "kkp3-ref"}) {
            ASSERT_EQ(run({"factorize", "--algo", algo, "--input", in, "--output", lz}).code, kExitOk);
            ASSERT_EQ(run({"decode", "--input", lz, "--output", back}).code, kExitOk);
            ASSERT_EQ(TempDir::read(back), texts[k]);
            ASSERT_EQ(run({"decode", "--input", lz}).out, texts[k]);
        }
    }
}

TEST(Cli, VerifyEmptyFile) {
    TempDir dir;
    const CliResult r = run({"verify", "--input", dir.write("empty", "")});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("factors=0"), std::string::npos);
}

TEST(Cli, VerifyAgreesOnCorpus) {
    TempDir dir;
    for (const auto& s : testing::structured_corpus())
        ASSERT_EQ(run({"verify", "--input", dir.write("x", s)}).code, kExitOk) << s.size();
    EXPECT_EQ(run({"verify", "--input", dir.write("big", textgen::repetitive_text(100000, 5)),
                   "--oracle-limit", "0"})
                  .code,
              kExitOk);
}

TEST(Cli, DumpArrays) {
    TempDir dir;
    const std::string in = dir.write("ab", "ab");
    EXPECT_EQ(run({"dump", "--input", in, "--array", "sa"}).out, "1\t1\n2\t2\n");
    EXPECT_EQ(run({"dump", "--input", in, "--array", "phi"}).out, "1\t0\n2\t1\n");
    EXPECT_EQ(run({"dump", "--input", in, "--array", "nsv"}).out, "1\t0\n2\t0\n");
    EXPECT_EQ(run({"dump", "--input", in, "--array", "lpf"}).out, "1\t0\n2\t0\n");
}

TEST(Cli, DumpLpfMatchesBruteForce) {
    TempDir dir;
    const std::string in = dir.write("ex", testing::kExample);
    const auto lpf = oracle::naive_lpf_prevocc(oracle::bytes_of(testing::kExample)).lpf;
    std::string want;
    for (std::size_t i = 1; i <= testing::kExample.size(); ++i)
        want += std::to_string(i) + "\t" + std::to_string(lpf[i]) + "\n";
    EXPECT_EQ(run({"dump", "--input", in, "--array", "lpf"}).out, want);
}

TEST(Cli, InvalidArgumentsExitThree) {
    TempDir dir;
    const std::string in = dir.write("ex", testing::kExample);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"compress"}).code, kExitUsage);
    EXPECT_EQ(run({"factorize", "--algo", "kkp2", "--input", in}).code, kExitUsage);
    EXPECT_EQ(run({"factorize"}).code, kExitUsage);
    EXPECT_EQ(run({"dump", "--input", in, "--array", "isa"}).code, kExitUsage);
    EXPECT_EQ(run({"bench", "--manifest", in, "--repeat", "0"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

TEST(Cli, IoAndFormatErrorsExitTwo) {
    TempDir dir;
    EXPECT_EQ(run({"factorize", "--input", dir.file("missing")}).code, kExitIo);
    EXPECT_EQ(run({"decode", "--input", dir.write("junk", "not a stream")}).code, kExitIo);
    EXPECT_EQ(run({"verify", "--input", dir.file("missing")}).code, kExitIo);
    EXPECT_EQ(run({"bench", "--manifest", dir.file("missing")}).code, kExitIo);
    EXPECT_EQ(run({"bench", "--manifest", dir.write("bad", "no tab here\n")}).code, kExitIo);
}

TEST(Cli, BenchWritesReport) {
    TempDir dir;
    const std::string a = dir.write("a", textgen::random_text(5000, 4, 1));
    const std::string manifest = dir.write("m", "rand\t" + a + "\nmissing\t" + dir.file("nope") + "\n");
    const std::string report = dir.file("report.tsv");
    ASSERT_EQ(run({"bench", "--manifest", manifest, "--output", report, "--algo", "bgone-t", "--algo", "bgtwo"}).code,
              kExitOk);
    const std::string tsv = TempDir::read(report);
    EXPECT_EQ(count_lines(tsv), 5u);
    EXPECT_NE(tsv.find("rand\tbgone-t\t5000\t"), std::string::npos);
    EXPECT_NE(tsv.find("missing\tbgtwo\tfailed"), std::string::npos);
}

TEST(Cli, GenProducesRequestedText) {
    TempDir dir;
    const std::string out = dir.file("g");
    ASSERT_EQ(run({"gen", "--kind", "random", "--size", "1000", "--sigma", "4", "--seed", "9", "--output", out}).code,
              kExitOk);
    EXPECT_EQ(TempDir::read(out), textgen::random_text(1000, 4, 9));
    EXPECT_EQ(run({"gen", "--kind", "fibonacci", "--size", "13"}).out, textgen::fibonacci_word(13));
}

TEST(Cli, CorpusUrlsNeedNoNetwork) {
    const CliResult r = run({"corpus-urls"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("english.200MB\thttp://"), std::string::npos);
}

} // namespace
} // namespace lzbg
