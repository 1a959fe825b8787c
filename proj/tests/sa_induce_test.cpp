#include "lzbg/errors.hpp"
#include "lzbg/oracles.hpp"
#include "lzbg/sa_induce.hpp"
#include "lzbg/textgen.hpp"
#include "test_corpus.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace lzbg {
namespace {

using testing::ranks_of;
using testing::view;

std::vector<std::uint64_t> fast_sa(const std::string& s) {
    Workspace ws(s.size());
    build_suffix_array(view(s), ws);
    EXPECT_EQ(ws.state(), WorkspaceState::Sa);
    return ranks_of(ws);
}

std::vector<std::uint64_t> sorted_lms(const std::string& s) {
    const auto b = oracle::bytes_of(s);
    const auto lms = oracle::naive_lms_positions(b);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p : oracle::naive_suffix_array(b))
        if (std::find(lms.begin(), lms.end(), p) != lms.end()) out.push_back(p);
    return out;
}

void expect_lms_sorted(const std::string& s) {
    Workspace ws(s.size());
    const LmsIndex idx = sort_lms_suffixes(view(s), ws);
    ASSERT_EQ(ws.state(), WorkspaceState::LmsSa);
    const auto want = sorted_lms(s);
    ASSERT_EQ(idx.k, want.size()) << s;
    for (std::size_t r = 0; r < idx.k; ++r) ASSERT_EQ(ws[r + 1], want[r]) << s << " r=" << r;
    for (std::size_t i = idx.k + 1; i <= s.size(); ++i) ASSERT_EQ(ws[i], kEmpty) << s;
}

TEST(SortLmsSuffixes, NoLmsInTwoSymbolText) {
    Workspace ws(2);
    EXPECT_EQ(sort_lms_suffixes(view("ab"), ws).k, 0u);
    EXPECT_EQ(ws[1], kEmpty);
    EXPECT_EQ(ws[2], kEmpty);
}

TEST(SortLmsSuffixes, NoLmsInEqualRun) {
    Workspace ws(4);
    EXPECT_EQ(sort_lms_suffixes(view("aaaa"), ws).k, 0u);
}

TEST(SortLmsSuffixes, ExampleMatchesFilteredNaiveOrder) { expect_lms_sorted(testing::kExample); }

TEST(SortLmsSuffixes, CorpusMatchesFilteredNaiveOrder) {
    for (const auto& s : testing::structured_corpus()) expect_lms_sorted(s);
    for (unsigned sigma : testing::kSigmas)
        for (const auto& s : testing::random_corpus(sigma, 100, 1000, 11)) expect_lms_sorted(s);
}

TEST(SortLmsSuffixes, LmsPositionsAreNotAdjacent) {
    for (const auto& s : testing::random_corpus(2, 100, 500, 12)) {
        Workspace ws(s.size());
        const LmsIndex idx = sort_lms_suffixes(view(s), ws);
        std::vector<word_t> pos(ws.data() + 1, ws.data() + 1 + idx.k);
        std::sort(pos.begin(), pos.end());
        for (std::size_t i = 1; i < pos.size(); ++i) ASSERT_GE(pos[i] - pos[i - 1], 2u);
    }
}

TEST(SortLmsSuffixes, RejectsNonRawWorkspace) {
    Workspace ws(3);
    ws.set_state(WorkspaceState::Sa);
    EXPECT_THROW(sort_lms_suffixes(view("abc"), ws), StateError);
}

TEST(SortLmsSuffixes, RejectsWrongSize) {
    Workspace ws(2);
    EXPECT_THROW(sort_lms_suffixes(view("abc"), ws), StateError);
}

TEST(BuildSuffixArray, EqualRun) { EXPECT_EQ(fast_sa("aaa"), (std::vector<std::uint64_t>{0, 3, 2, 1})); }

TEST(BuildSuffixArray, TwoSymbols) { EXPECT_EQ(fast_sa("ab"), (std::vector<std::uint64_t>{0, 1, 2})); }

TEST(BuildSuffixArray, EmptyAndSingle) {
    EXPECT_EQ(fast_sa(""), (std::vector<std::uint64_t>{0}));
    EXPECT_EQ(fast_sa("q"), (std::vector<std::uint64_t>{0, 1}));
}

TEST(BuildSuffixArray, ExampleMatchesNaive) {
    EXPECT_EQ(fast_sa(testing::kExample), oracle::naive_suffix_array(oracle::bytes_of(testing::kExample)));
}

TEST(BuildSuffixArray, RandomTextsUpToTenThousandMatchNaive) {
    for (unsigned sigma : testing::kSigmas)
        for (const auto& s : testing::random_corpus(sigma, 40, 10000, 13))
            ASSERT_EQ(fast_sa(s), oracle::naive_suffix_array(oracle::bytes_of(s))) << "sigma=" << sigma;
}

TEST(BuildSuffixArray, StructuredTextsMatchNaive) {
    for (const auto& s : testing::structured_corpus())
        ASSERT_EQ(fast_sa(s), oracle::naive_suffix_array(oracle::bytes_of(s))) << s.size();
}

TEST(BuildSuffixArray, ExhaustiveBinaryTexts) {
    for (std::size_t n = 1; n <= 12; ++n)
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::string s(n, 'a');
            for (std::size_t i = 0; i < n; ++i)
                if (bits >> i & 1) s[i] = 'b';
            ASSERT_EQ(fast_sa(s), oracle::naive_suffix_array(oracle::bytes_of(s))) << s;
        }
}

void expect_sorted_permutation(const std::string& s, std::size_t samples) {
    const auto sa = fast_sa(s);
    const std::size_t n = s.size();
    std::vector<bool> seen(n + 1);
    for (std::size_t r = 1; r <= n; ++r) {
        ASSERT_GE(sa[r], 1u);
        ASSERT_LE(sa[r], n);
        ASSERT_FALSE(seen[sa[r]]);
        seen[sa[r]] = true;
    }
    std::mt19937_64 rng(n);
    const auto b = oracle::bytes_of(s);
    for (std::size_t k = 0; k < samples && n > 1; ++k) {
        const std::size_t r = 1 + rng() % (n - 1);
        ASSERT_TRUE(oracle::suffix_less(b, sa[r], sa[r + 1])) << "rank " << r;
    }
}

TEST(BuildSuffixArray, LargeTextsAreSortedPermutations) {
    expect_sorted_permutation(textgen::random_text(1 << 20, 4, 21), 20000);
    expect_sorted_permutation(textgen::repetitive_text(1 << 20, 22), 2000);
    expect_sorted_permutation(textgen::english_like_text(1 << 20, 23), 20000);
    expect_sorted_permutation(textgen::fibonacci_word(1 << 18), 500);
}

TEST(BuildSuffixArray, RejectsNonRawWorkspace) {
    Workspace ws(3);
    ws.set_state(WorkspaceState::Phi);
    EXPECT_THROW(build_suffix_array(view("abc"), ws), StateError);
}

} // namespace
} // namespace lzbg
